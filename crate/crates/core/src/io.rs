//! Text formats: code-spec JSON, hex symbol vectors and packed bit vectors.

use serde::{Deserialize, Serialize};

use crate::code::{CodeKind, CodeSpec};
use crate::error::{Error, Result};
use crate::gf::{Field, FieldDescriptor, Gf};
use crate::lch::BasisContext;
use crate::poly::Poly;

/// On-disk form of a [`CodeSpec`]. Elements are hex strings, polynomial
/// coefficients are listed from degree 0 upwards.
///
/// For Goppa codes `k` records the binary dimension and is ignored on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeSpecFile {
    pub kind: CodeKind,
    pub field: FieldDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub support: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub y: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub goppa_poly: Option<Vec<String>>,
}

fn hex_list(field: &Field, xs: &[Gf]) -> Vec<String> {
    xs.iter()
        .map(|&x| format!("0x{}", field.format_element(x)))
        .collect()
}

fn parse_list(field: &Field, name: &str, items: &[String]) -> Result<Vec<Gf>> {
    items
        .iter()
        .enumerate()
        .map(|(i, s)| {
            field
                .parse_element(s)
                .map_err(|msg| Error::parse(name, i, msg))
        })
        .collect()
}

fn required<'a, T>(value: &'a Option<T>, name: &str) -> Result<&'a T> {
    value
        .as_ref()
        .ok_or_else(|| Error::parse(name, 0, format!("missing field `{name}`")))
}

impl CodeSpecFile {
    pub fn from_spec(spec: &CodeSpec) -> Result<Self> {
        let f = spec.field();
        let basis = spec.basis().v();
        let standard = basis.iter().enumerate().all(|(i, v)| v.0 == 1 << i);
        let mut file = CodeSpecFile {
            kind: spec.kind(),
            field: f.descriptor(),
            basis: (!standard).then(|| hex_list(f, basis)),
            support: hex_list(f, spec.support()),
            w: None,
            y: None,
            k: None,
            goppa_poly: None,
        };
        match spec.kind() {
            CodeKind::Grs => {
                file.w = Some(hex_list(f, spec.w()));
                file.k = Some(spec.k());
            }
            CodeKind::Alternant => {
                file.y = Some(hex_list(f, spec.y()));
                file.k = Some(spec.k());
            }
            CodeKind::Goppa => {
                let g = spec.goppa_poly().expect("Goppa spec has G");
                file.goppa_poly = Some(hex_list(f, g.coeffs()));
                file.k = Some(spec.dimension()?);
            }
        }
        Ok(file)
    }

    pub fn build(&self) -> Result<CodeSpec> {
        let field = self.field.build()?;
        let basis = match &self.basis {
            Some(v) => BasisContext::new(field.clone(), parse_list(&field, "basis", v)?)?,
            None => BasisContext::polynomial(field.clone()),
        };
        let support = parse_list(&field, "support", &self.support)?;
        match self.kind {
            CodeKind::Grs => {
                let w = parse_list(&field, "w", required(&self.w, "w")?)?;
                CodeSpec::grs(&basis, support, w, *required(&self.k, "k")?)
            }
            CodeKind::Alternant => {
                let y = parse_list(&field, "y", required(&self.y, "y")?)?;
                CodeSpec::alternant(&basis, support, y, *required(&self.k, "k")?)
            }
            CodeKind::Goppa => {
                let g = parse_list(
                    &field,
                    "goppa_poly",
                    required(&self.goppa_poly, "goppa_poly")?,
                )?;
                CodeSpec::goppa(&basis, support, Poly::from_coeffs(g))
            }
        }
    }
}

/// Reads a code spec from JSON text.
pub fn read_spec(text: &str) -> Result<CodeSpec> {
    let file: CodeSpecFile = serde_json::from_str(text).map_err(|e| {
        Error::parse(
            "spec",
            e.line(),
            format!("{e} (line {}, column {})", e.line(), e.column()),
        )
    })?;
    file.build()
}

pub fn write_spec(spec: &CodeSpec) -> Result<String> {
    let file = CodeSpecFile::from_spec(spec)?;
    Ok(serde_json::to_string_pretty(&file).expect("serializable"))
}

/// Whitespace-separated hex elements, sixteen per line.
pub fn format_symbols(field: &Field, v: &[Gf]) -> String {
    let mut out = String::new();
    for (i, chunk) in v.chunks(16).enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let line: Vec<String> = chunk.iter().map(|&x| field.format_element(x)).collect();
        out.push_str(&line.join(" "));
    }
    out.push('\n');
    out
}

/// Parses whitespace-separated hex elements; `expected` checks the count.
pub fn parse_symbols(field: &Field, text: &str, expected: Option<usize>) -> Result<Vec<Gf>> {
    let v: Vec<Gf> = text
        .split_whitespace()
        .enumerate()
        .map(|(i, tok)| {
            field
                .parse_element(tok)
                .map_err(|msg| Error::parse("vector", i, msg))
        })
        .collect::<Result<_>>()?;
    if let Some(n) = expected {
        if v.len() != n {
            return Err(Error::parse(
                "vector",
                v.len().min(n),
                format!("expected {n} elements, found {}", v.len()),
            ));
        }
    }
    Ok(v)
}

/// Packs bits LSB-first into bytes written as lowercase hex.
pub fn format_bits(bits: &[u8]) -> String {
    let mut out = String::with_capacity(bits.len() / 4 + 1);
    for chunk in bits.chunks(8) {
        let byte = chunk
            .iter()
            .enumerate()
            .fold(0u8, |acc, (i, &b)| acc | (b & 1) << i);
        out.push_str(&format!("{byte:02x}"));
    }
    out.push('\n');
    out
}

/// Inverse of [`format_bits`]; whitespace is ignored and padding bits must be zero.
pub fn parse_bits(text: &str, n: usize) -> Result<Vec<u8>> {
    let digits: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bytes = n.div_ceil(8);
    if digits.len() != 2 * bytes {
        return Err(Error::parse(
            "bits",
            digits.len().min(2 * bytes),
            format!(
                "expected {} hex digits for {n} bits, found {}",
                2 * bytes,
                digits.len()
            ),
        ));
    }
    let mut bits = Vec::with_capacity(8 * bytes);
    for (i, pair) in digits.chunks(2).enumerate() {
        let s: String = pair.iter().collect();
        let byte = u8::from_str_radix(&s, 16)
            .map_err(|e| Error::parse("bits", 2 * i, format!("{s:?}: {e}")))?;
        bits.extend((0..8).map(|b| byte >> b & 1));
    }
    if let Some(p) = bits[n..].iter().position(|&b| b != 0) {
        return Err(Error::parse("bits", n + p, "nonzero padding bit"));
    }
    bits.truncate(n);
    Ok(bits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::goppa_support;

    #[test]
    fn spec_round_trip() {
        let field = Field::new(5, 0b100101).unwrap();
        let basis =
            BasisContext::new(field.clone(), vec![Gf(3), Gf(2), Gf(4), Gf(8), Gf(16)]).unwrap();
        let support: Vec<Gf> = (1..21).map(Gf).collect();
        let w: Vec<Gf> = (0..20).map(|i| Gf(1 + i % 31)).collect();
        let spec = CodeSpec::grs(&basis, support, w, 12).unwrap();
        let text = write_spec(&spec).unwrap();
        assert!(text.contains("\"kind\": \"grs\""));
        assert!(text.contains("\"modulus\": \"0x25\""));
        let back = read_spec(&text).unwrap();
        assert_eq!(back.support(), spec.support());
        assert_eq!(back.w(), spec.w());
        assert_eq!(back.basis().v(), spec.basis().v());
        assert_eq!(back.k(), 12);

        let g = Poly::from_coeffs(vec![Gf(2), Gf(1), Gf(1)]);
        let pb = BasisContext::polynomial(field.clone());
        let gsupport = goppa_support(&pb, &g, 30).unwrap();
        let goppa = CodeSpec::goppa(&pb, gsupport, g.clone()).unwrap();
        let text = write_spec(&goppa).unwrap();
        assert!(!text.contains("basis"));
        let back = read_spec(&text).unwrap();
        assert_eq!(back.goppa_poly(), Some(&g));
        assert_eq!(back.y(), goppa.y());
    }

    #[test]
    fn parse_errors_name_field_and_position() {
        let text = r#"{"kind":"grs","field":{"m":4,"modulus":"0x13"},"support":["0x1","0x2","0xzz"],"w":["0x1","0x1","0x1"],"k":1}"#;
        match read_spec(text) {
            Err(Error::Parse {
                field, position, ..
            }) => {
                assert_eq!(field, "support");
                assert_eq!(position, 2);
            }
            other => panic!("{other:?}"),
        }
        let text = r#"{"kind":"grs","field":{"m":4,"modulus":"0x13"},"support":["0x1"],"k":1}"#;
        assert!(matches!(read_spec(text), Err(Error::Parse { field, .. }) if field == "w"));
        assert!(matches!(read_spec("{"), Err(Error::Parse { field, .. }) if field == "spec"));
        let f = Field::new(4, 0x13).unwrap();
        assert!(matches!(
            parse_symbols(&f, "1 2 10", None),
            Err(Error::Parse { position: 2, .. })
        ));
    }

    #[test]
    fn vector_formats() {
        let f = Field::new(13, 0x201b).unwrap();
        let v: Vec<Gf> = (0..40).map(|i| Gf(i * 197 % 8192)).collect();
        let text = format_symbols(&f, &v);
        assert!(text.starts_with("0000 00c5"));
        assert_eq!(parse_symbols(&f, &text, Some(40)).unwrap(), v);
        assert!(parse_symbols(&f, &text, Some(41)).is_err());

        let bits: Vec<u8> = (0..19).map(|i| (i % 3 == 0) as u8).collect();
        let text = format_bits(&bits);
        assert_eq!(text.trim(), "499204");
        assert_eq!(parse_bits(&text, 19).unwrap(), bits);
        assert!(parse_bits("4924fe", 19).is_err());
        assert!(parse_bits("49", 19).is_err());
    }
}
