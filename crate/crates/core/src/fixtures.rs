//! Fixtures shipped with the repository.

use crate::error::{Error, Result};
use crate::lie::LInfinityStructure;

pub const NAMES: [&str; 5] = ["abelian2", "odd-square", "heis", "koszul-x2", "harrison-d2"];

pub fn source(name: &str) -> Option<&'static str> {
    Some(match name {
        "abelian2" => include_str!("../../../fixtures/abelian2.json"),
        "odd-square" => include_str!("../../../fixtures/odd-square.json"),
        "heis" => include_str!("../../../fixtures/heis.json"),
        "koszul-x2" => include_str!("../../../fixtures/koszul-x2.json"),
        "harrison-d2" => include_str!("../../../fixtures/harrison-d2.json"),
        _ => return None,
    })
}

pub fn load(name: &str) -> Result<LInfinityStructure> {
    let text = source(name).ok_or_else(|| Error::Range(format!("no fixture named `{name}`")))?;
    LInfinityStructure::from_json(text)
}

/// Fixture restricted to positive degrees, ready for the Maurer-Cartan pipeline.
pub fn load_positive(name: &str) -> Result<LInfinityStructure> {
    Ok(load(name)?.truncate_positive())
}

/// `a, b, c` in degrees 1, 2, 3 with `δb = c` and `[a, b] = c`. Not in [`NAMES`]; the
/// shipped fixtures stop at degree 2, and this one exercises level-2 generators.
pub fn three_step() -> LInfinityStructure {
    LInfinityStructure::from_json(
        r#"{"name": "three-step",
            "generators": [{"name": "a", "degree": 1}, {"name": "b", "degree": 2}, {"name": "c", "degree": 3}],
            "brackets": [{"args": ["b"], "value": [{"gen": "c", "coef": "1"}]},
                         {"args": ["a", "b"], "value": [{"gen": "c", "coef": "1"}]}],
            "max_arity": 2}"#,
    )
    .expect("well-formed")
}
