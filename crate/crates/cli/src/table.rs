//! CSV output in C `%.12e` style, and the reader used for read-back checks.

use std::io::{self, Write};

/// `x` as C's `printf("%.12e", x)` would print it.
pub fn sci(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }
    let s = format!("{x:.12e}");
    let (mantissa, exp) = s.split_once('e').expect("exponent in {:e} output");
    let exp: i32 = exp.parse().expect("integer exponent");
    format!("{mantissa}e{}{:02}", if exp < 0 { '-' } else { '+' }, exp.unsigned_abs())
}

/// Header, data rows and `#` footer lines, written with `\n` endings.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    pub footer: Vec<String>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Self { header: header.iter().map(|s| s.to_string()).collect(), ..Self::default() }
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> io::Result<()> {
        {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut out);
            w.write_record(&self.header)?;
            for row in &self.rows {
                w.write_record(row)?;
            }
            w.flush()?;
        }
        for line in &self.footer {
            writeln!(out, "# {line}")?;
        }
        out.flush()
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("utf-8 output")
    }

    /// Parses text produced by `write_to`.
    pub fn read(text: &str) -> Result<Self, csv::Error> {
        let mut r = csv::ReaderBuilder::new().comment(Some(b'#')).from_reader(text.as_bytes());
        let header = r.headers()?.iter().map(str::to_string).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(str::to_string).collect()))
            .collect::<Result<_, _>>()?;
        let footer = text.lines().filter_map(|l| l.strip_prefix("# ")).map(str::to_string).collect();
        Ok(Self { header, rows, footer })
    }

    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.header.iter().position(|h| h == name)?;
        self.rows.iter().map(|row| row.get(j).and_then(|v| v.parse().ok())).collect()
    }

    /// Value of a `key=value` footer line.
    pub fn footer_value(&self, key: &str) -> Option<&str> {
        self.footer.iter().find_map(|l| l.strip_prefix(key).and_then(|rest| rest.strip_prefix('=')))
    }
}
