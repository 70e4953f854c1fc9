//! The six irreducible modules of the `W_3` algebra at `c = 4/5`, viewed as
//! `L(4/5, 0)`-modules, with their `Z/3` charges. Stored as data only.

use serde::Serialize;

use crate::rational::{int, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct W3Module {
    /// Highest weights of the Virasoro constituents.
    #[serde(serialize_with = "serialize_weights")]
    pub weights: Vec<Rational>,
    /// `Some('+')` / `Some('-')` for the two inequivalent modules sharing
    /// the same constituents.
    pub variant: Option<char>,
    /// Exponent `k` of the charge `zeta^k`, `zeta = exp(2 pi i / 3)`.
    pub zeta_power: i8,
}

fn serialize_weights<S: serde::Serializer>(ws: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(ws.len()))?;
    for w in ws {
        seq.serialize_element(&crate::rational::format_rational(w))?;
    }
    seq.end()
}

pub fn w3_modules() -> Vec<W3Module> {
    let module = |weights: Vec<Rational>, variant, zeta_power| W3Module { weights, variant, zeta_power };
    vec![
        module(vec![int(0), int(3)], None, 0),
        module(vec![rat(2, 5), rat(7, 5)], None, 0),
        module(vec![rat(2, 3)], Some('+'), 1),
        module(vec![rat(2, 3)], Some('-'), -1),
        module(vec![rat(1, 15)], Some('+'), 1),
        module(vec![rat(1, 15)], Some('-'), -1),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::virasoro::weight_exists;

    #[test]
    fn constituents_lie_on_the_grid() {
        let ms = w3_modules();
        assert_eq!(ms.len(), 6);
        for m in &ms {
            for h in &m.weights {
                assert!(weight_exists(3, h).unwrap());
            }
        }
        let charge: i32 = ms.iter().map(|m| i32::from(m.zeta_power)).sum();
        assert_eq!(charge, 0);
    }
}
