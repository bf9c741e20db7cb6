//! JSON and CSV formats for elements, bases, sequences and Hilbert tables.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::category::{OrderedSurjections, PowerMap};
use crate::error::{domain, GcatError, Result};
use crate::field::PrimeField;
use crate::finset::FinMap;
use crate::groebner::GroebnerBasis;
use crate::module::ModElement;
use crate::upoly::UPoly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub mono: FinMap,
    pub coord: usize,
    pub coeff: i64,
}

/// An element of `F_p^k[Γ_os(-, target)]` at `level`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub target: usize,
    pub k: usize,
    pub p: u32,
    pub level: usize,
    pub terms: Vec<TermJson>,
}

/// A polynomial of the monoid instance. The level defaults to the degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub poly: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<usize>,
}

impl ElementJson {
    pub fn from_element(v: &ModElement<FinMap>) -> Self {
        ElementJson {
            target: v.target(),
            k: v.k(),
            p: v.field().characteristic(),
            level: v.level(),
            terms: v
                .terms()
                .map(|(m, c)| TermJson {
                    mono: m.morphism.clone(),
                    coord: m.coord,
                    coeff: c as i64,
                })
                .collect(),
        }
    }

    pub fn to_element(&self) -> Result<ModElement<FinMap>> {
        let field = PrimeField::new(self.p)?;
        ModElement::from_terms(
            &OrderedSurjections,
            self.level,
            self.target,
            self.k,
            field,
            self.terms.iter().map(|t| (t.mono.clone(), t.coord, t.coeff)),
        )
    }
}

impl PolyJson {
    pub fn from_element(v: &ModElement<PowerMap>) -> Self {
        PolyJson {
            poly: UPoly::from_element(v).to_string(),
            level: Some(v.level()),
        }
    }

    pub fn to_element(&self, field: PrimeField) -> Result<ModElement<PowerMap>> {
        let p = UPoly::parse(&self.poly, field)?;
        let level = self.level.or(p.degree()).unwrap_or(0);
        p.to_element(level)
    }
}

/// A completed basis as written to disk.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BasisFile<E> {
    pub category: String,
    pub width: usize,
    pub target: usize,
    pub k: usize,
    pub p: u32,
    pub elements: Vec<E>,
}

pub fn os_basis_to_file(gb: &GroebnerBasis<FinMap>) -> BasisFile<ElementJson> {
    BasisFile {
        category: gb.category.clone(),
        width: gb.width,
        target: gb.target,
        k: gb.k,
        p: gb.field.characteristic(),
        elements: gb.elements.iter().map(ElementJson::from_element).collect(),
    }
}

pub fn poly_basis_to_file(gb: &GroebnerBasis<PowerMap>) -> BasisFile<PolyJson> {
    BasisFile {
        category: gb.category.clone(),
        width: gb.width,
        target: gb.target,
        k: gb.k,
        p: gb.field.characteristic(),
        elements: gb.elements.iter().map(PolyJson::from_element).collect(),
    }
}

fn check_shape<M: Ord + Clone>(
    file_category: &str,
    expected_category: &str,
    elements: &[ModElement<M>],
    target: usize,
    k: usize,
    field: PrimeField,
    width: usize,
) -> Result<()> {
    if file_category != expected_category {
        return domain(format!(
            "basis file is for category `{file_category}`, expected `{expected_category}`"
        ));
    }
    for v in elements {
        if v.is_zero() {
            return domain("basis files may not contain zero elements");
        }
        if v.target() != target || v.k() != k || v.field() != field {
            return domain("basis element does not match the file header");
        }
        if v.level() > width {
            return Err(GcatError::Truncation {
                level: v.level(),
                width,
            });
        }
    }
    Ok(())
}

pub fn os_basis_from_file(file: &BasisFile<ElementJson>) -> Result<GroebnerBasis<FinMap>> {
    let field = PrimeField::new(file.p)?;
    let elements = file
        .elements
        .iter()
        .map(ElementJson::to_element)
        .collect::<Result<Vec<_>>>()?;
    check_shape(&file.category, "os", &elements, file.target, file.k, field, file.width)?;
    Ok(GroebnerBasis {
        elements,
        width: file.width,
        category: file.category.clone(),
        target: file.target,
        k: file.k,
        field,
    })
}

pub fn poly_basis_from_file(file: &BasisFile<PolyJson>) -> Result<GroebnerBasis<PowerMap>> {
    let field = PrimeField::new(file.p)?;
    let elements = file
        .elements
        .iter()
        .map(|e| e.to_element(field))
        .collect::<Result<Vec<_>>>()?;
    check_shape(&file.category, "nat", &elements, 0, 1, field, file.width)?;
    Ok(GroebnerBasis {
        elements,
        width: file.width,
        category: file.category.clone(),
        target: 0,
        k: 1,
        field,
    })
}

/// Which category a basis file belongs to, read from its header.
pub fn basis_category(text: &str) -> Result<String> {
    #[derive(Deserialize)]
    struct Header {
        category: String,
    }
    let h: Header = serde_json::from_str(text).map_err(parse_err)?;
    Ok(h.category)
}

pub fn parse_err(e: serde_json::Error) -> GcatError {
    GcatError::Parse(e.to_string())
}

/// A JSON list of maps.
pub fn parse_sequence(text: &str) -> Result<Vec<FinMap>> {
    serde_json::from_str(text).map_err(parse_err)
}

/// A JSON list of `Γ_os` elements.
pub fn parse_os_elements(text: &str) -> Result<Vec<ModElement<FinMap>>> {
    let raw: Vec<ElementJson> = serde_json::from_str(text).map_err(parse_err)?;
    raw.iter().map(ElementJson::to_element).collect()
}

/// Either a JSON list of `{"poly": ...}` objects or comma-separated
/// polynomials such as `x^2+x+1, x^3+1`.
pub fn parse_polys(text: &str, field: PrimeField) -> Result<Vec<UPoly>> {
    let trimmed = text.trim();
    if trimmed.starts_with('[') {
        let raw: Vec<PolyJson> = serde_json::from_str(trimmed).map_err(parse_err)?;
        raw.iter().map(|p| UPoly::parse(&p.poly, field)).collect()
    } else if trimmed.is_empty() {
        Ok(Vec::new())
    } else {
        trimmed.split(',').map(|s| UPoly::parse(s, field)).collect()
    }
}

/// One row of a Hilbert table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HilbertRow {
    pub level: usize,
    pub dim_standard_monomials: usize,
    pub dim_rank_oracle: usize,
    pub agree: bool,
}

pub fn hilbert_rows(monomial_dims: &[usize], oracle_dims: &[usize]) -> Vec<HilbertRow> {
    monomial_dims
        .iter()
        .zip(oracle_dims)
        .enumerate()
        .map(|(level, (&a, &b))| HilbertRow {
            level,
            dim_standard_monomials: a,
            dim_rank_oracle: b,
            agree: a == b,
        })
        .collect()
}

pub fn hilbert_csv(rows: &[HilbertRow]) -> String {
    let mut out = String::from("level,dim_standard_monomials,dim_rank_oracle,agree\n");
    for r in rows {
        writeln!(
            out,
            "{},{},{},{}",
            r.level,
            r.dim_standard_monomials,
            r.dim_rank_oracle,
            u8::from(r.agree)
        )
        .expect("writing to a String");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn element_json_shape() {
        let text = r#"{"target":2,"k":1,"p":2,"level":3,"terms":[
            {"mono":{"m":3,"n":2,"values":[1,1,2]},"coord":1,"coeff":1},
            {"mono":{"m":3,"n":2,"values":[1,2,2]},"coord":1,"coeff":3}]}"#;
        let raw: ElementJson = serde_json::from_str(text).unwrap();
        let v = raw.to_element().unwrap();
        assert_eq!(v.len(), 2);
        let back = ElementJson::from_element(&v);
        assert_eq!(back.terms[1].coeff, 1);
        assert_eq!(back.to_element().unwrap(), v);
    }

    #[test]
    fn bad_elements_are_rejected() {
        let wrong_level = r#"[{"target":2,"k":1,"p":2,"level":4,"terms":[
            {"mono":{"m":3,"n":2,"values":[1,1,2]},"coord":1,"coeff":1}]}]"#;
        assert!(parse_os_elements(wrong_level).is_err());
        let not_prime = r#"[{"target":2,"k":1,"p":4,"level":3,"terms":[]}]"#;
        assert!(parse_os_elements(not_prime).is_err());
        assert!(parse_os_elements("{").is_err());
    }

    #[test]
    fn polys_from_text_or_json() {
        let f2 = PrimeField::new(2).unwrap();
        let a = parse_polys("x^2+x+1, x^3+1", f2).unwrap();
        let b = parse_polys(r#"[{"poly":"x^2+x+1"},{"poly":"x^3+1"}]"#, f2).unwrap();
        assert_eq!(a, b);
        assert!(parse_polys("", f2).unwrap().is_empty());
    }

    #[test]
    fn hilbert_csv_columns() {
        let rows = hilbert_rows(&[0, 1, 3], &[0, 1, 2]);
        assert_eq!(
            hilbert_csv(&rows),
            "level,dim_standard_monomials,dim_rank_oracle,agree\n0,0,0,1\n1,1,1,1\n2,3,2,0\n"
        );
    }
}
