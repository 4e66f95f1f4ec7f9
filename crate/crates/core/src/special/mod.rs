pub mod confluent;
pub mod gamma;
pub mod orthopoly;

pub use confluent::{kummer_m, kummer_m_series, tricomi_u, tricomi_u_connection, SeriesSum};
pub use gamma::gamma_complex;
pub use orthopoly::{hermite, hermite_coeffs, laguerre, laguerre_coeffs, laguerre_hermite_identity_residual};
