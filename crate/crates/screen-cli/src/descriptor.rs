use std::str::FromStr;
use std::sync::Arc;

use exact_linalg::Rational;
use rep_lab::{
    adjoint_module, dual_module, kac_module, natural_module, realization_module, restrict_to_sl,
    simple_module, sym_power_eps, tau_twist, trivial_module, Module, ModuleError, NaturalVariant,
};
use superalg_core::{AlgebraError, AlgebraKind, LieSuperalgebra, Weight};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DescriptorError {
    #[error("bad algebra descriptor {0:?} (expected sl:m:n or gl:m:n)")]
    Algebra(String),
    #[error("bad module descriptor {0:?}")]
    Module(String),
    #[error("bad weight {0:?} (expected L1,..,Lm/Lm+1,..,Lm+n)")]
    Weight(String),
    #[error(transparent)]
    AlgebraBuild(#[from] AlgebraError),
    #[error(transparent)]
    ModuleBuild(#[from] ModuleError),
}

/// Parses `sl:m:n` / `gl:m:n`.
pub fn parse_algebra(desc: &str) -> Result<Arc<LieSuperalgebra>, DescriptorError> {
    let parts: Vec<&str> = desc.split(':').collect();
    if parts.len() != 3 {
        return Err(DescriptorError::Algebra(desc.into()));
    }
    let kind = match parts[0] {
        "sl" => AlgebraKind::Sl,
        "gl" => AlgebraKind::Gl,
        _ => return Err(DescriptorError::Algebra(desc.into())),
    };
    let m: usize = parts[1].parse().map_err(|_| DescriptorError::Algebra(desc.into()))?;
    let n: usize = parts[2].parse().map_err(|_| DescriptorError::Algebra(desc.into()))?;
    Ok(LieSuperalgebra::build(kind, m, n)?)
}

/// Parses `L1,..,Lm/Lm+1,..,Lm+n` with rational labels.
pub fn parse_weight(alg: &LieSuperalgebra, text: &str) -> Result<Weight, DescriptorError> {
    let halves: Vec<&str> = text.split('/').collect();
    if halves.len() != 2 {
        return Err(DescriptorError::Weight(text.into()));
    }
    let mut labels: Vec<Rational> = Vec::new();
    for (half, count) in halves.iter().zip([alg.m(), alg.n()]) {
        let parts: Vec<&str> = half.split(',').collect();
        if parts.len() != count {
            return Err(DescriptorError::Weight(text.into()));
        }
        for p in parts {
            labels.push(
                Rational::from_str(p.trim()).map_err(|_| DescriptorError::Weight(text.into()))?,
            );
        }
    }
    Ok(Weight::new(labels))
}

/// Builds a module from its descriptor:
/// `trivial | adjoint | natural[:section3] | hw:<weight> | kac:<weight> |
///  dual(<desc>) | tau(<desc>) | sym2(<desc>) | real:m`.
pub fn parse_module(
    alg: &Arc<LieSuperalgebra>,
    desc: &str,
) -> Result<Module, DescriptorError> {
    let desc = desc.trim();
    if let Some(inner) = desc.strip_prefix("dual(").and_then(|s| s.strip_suffix(')')) {
        return Ok(dual_module(&parse_module(alg, inner)?));
    }
    if let Some(inner) = desc.strip_prefix("tau(").and_then(|s| s.strip_suffix(')')) {
        return Ok(tau_twist(&parse_module(alg, inner)?));
    }
    if let Some(inner) = desc.strip_prefix("sym2(").and_then(|s| s.strip_suffix(')')) {
        return Ok(sym_power_eps(&parse_module(alg, inner)?, 2));
    }
    match desc {
        "trivial" => Ok(trivial_module(alg)),
        "adjoint" => Ok(adjoint_module(alg)),
        "natural" => Ok(natural_module(alg, NaturalVariant::Standard)?),
        "natural:section3" => Ok(natural_module(alg, NaturalVariant::OddShifted)?),
        _ => {
            if let Some(wtext) = desc.strip_prefix("hw:") {
                let w = parse_weight(alg, wtext)?;
                return Ok(simple_module(alg, &w)?);
            }
            if let Some(wtext) = desc.strip_prefix("kac:") {
                let w = parse_weight(alg, wtext)?;
                return Ok(kac_module(alg, &w)?);
            }
            if let Some(mtext) = desc.strip_prefix("real:") {
                let m: usize =
                    mtext.parse().map_err(|_| DescriptorError::Module(desc.into()))?;
                return match alg.kind() {
                    AlgebraKind::Gl => Ok(realization_module(alg, m)?),
                    AlgebraKind::Sl => {
                        let gl = LieSuperalgebra::build(AlgebraKind::Gl, alg.m(), alg.n())?;
                        Ok(restrict_to_sl(&realization_module(&gl, m)?, alg))
                    }
                    AlgebraKind::EvenPart => Err(DescriptorError::Module(desc.into())),
                };
            }
            Err(DescriptorError::Module(desc.into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn algebra_round_trip() {
        assert_eq!(parse_algebra("sl:3:2").unwrap().descriptor(), "sl:3:2");
        assert_eq!(parse_algebra("gl:2:1").unwrap().dim(), 9);
        assert!(parse_algebra("su:2:1").is_err());
        assert!(parse_algebra("sl:2").is_err());
    }

    #[test]
    fn weights_and_modules() {
        let alg = parse_algebra("sl:3:2").unwrap();
        let w = parse_weight(&alg, "1,1,1/-1,-2").unwrap();
        assert_eq!(w, Weight::from_ints(&[1, 1, 1, -1, -2]));
        assert!(parse_weight(&alg, "1,1/-1,-2").is_err());

        assert_eq!(parse_module(&alg, "trivial").unwrap().dim(), 1);
        assert_eq!(parse_module(&alg, "adjoint").unwrap().dim(), 24);
        assert_eq!(parse_module(&alg, "natural").unwrap().dim(), 5);
        assert_eq!(parse_module(&alg, "dual(natural)").unwrap().dim(), 5);
        assert_eq!(parse_module(&alg, "hw:1,1,1/-1,-2").unwrap().dim(), 5);
        assert_eq!(parse_module(&alg, "kac:0,0,0/0,0").unwrap().dim(), 64);
        assert_eq!(parse_module(&alg, "sym2(adjoint)").unwrap().dim(), 288);
        assert!(parse_module(&alg, "natural:section3").is_err());

        let sl31 = parse_algebra("sl:3:1").unwrap();
        assert_eq!(parse_module(&sl31, "real:3").unwrap().dim(), 7);
        let gl31 = parse_algebra("gl:3:1").unwrap();
        assert_eq!(parse_module(&gl31, "real:3").unwrap().dim(), 7);
        assert_eq!(parse_module(&gl31, "natural:section3").unwrap().dim(), 4);
    }
}
