//! Builtin graph families addressed by short specs.
//!
//! `point`, `empty`, `I`, `J`, `Zm:<m>`, `Cmn:<m>,<n>`, `Sn:<n>`,
//! `cone:<spec>`, `susp:<spec>` and `box:<spec>x<spec>`.

use mpss_core::digraph::{
    bidirected_cycle, box_product, cone, directed_cycle, interval_i, interval_j, point, sphere,
    suspension, DiGraph,
};

use crate::io::InputError;

pub fn parse_family(spec: &str) -> Result<DiGraph, InputError> {
    let fail = |message: String| InputError::Family {
        spec: spec.to_string(),
        message,
    };
    let number = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|e| fail(format!("`{s}`: {e}")))
    };
    let spec = spec.trim();
    let (head, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let g = match head {
        "point" if arg.is_empty() => point(),
        "empty" if arg.is_empty() => DiGraph::empty(),
        "I" if arg.is_empty() => interval_i(),
        "J" if arg.is_empty() => interval_j(),
        "Zm" => directed_cycle(number(arg)?)?,
        "Cmn" => {
            let (m, n) = arg
                .split_once(',')
                .ok_or_else(|| fail("expected `Cmn:<m>,<n>`".into()))?;
            bidirected_cycle(number(m)?, number(n)?)?
        }
        "Sn" => sphere(number(arg)?)?,
        "cone" => cone(&parse_family(arg)?).graph,
        "susp" => suspension(&parse_family(arg)?),
        "box" => {
            // the first split where both sides parse
            let split = arg.match_indices('x').find_map(|(i, _)| {
                Some((
                    parse_family(&arg[..i]).ok()?,
                    parse_family(&arg[i + 1..]).ok()?,
                ))
            });
            let (a, b) = split.ok_or_else(|| fail("expected `box:<spec>x<spec>`".into()))?;
            box_product(&a, &b).graph
        }
        _ => return Err(fail("unknown family".into())),
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_family("point").unwrap().vertex_count(), 1);
        assert_eq!(parse_family("Zm:4").unwrap().edge_count(), 4);
        assert_eq!(parse_family("Cmn:3,2").unwrap().vertex_count(), 5);
        assert_eq!(parse_family("Sn:1").unwrap().vertex_count(), 4);
        assert_eq!(parse_family("susp:point").unwrap().vertex_count(), 3);
        assert_eq!(parse_family("cone:Zm:3").unwrap().vertex_count(), 7);
        assert_eq!(parse_family("box:Zm:3xSn:1").unwrap().vertex_count(), 12);
        assert_eq!(parse_family("box:box:IxI xI").unwrap().vertex_count(), 27);
        assert_eq!(
            parse_family("susp:susp:empty").unwrap(),
            parse_family("Sn:1").unwrap()
        );
    }

    #[test]
    fn rejects_malformed_specs() {
        for bad in [
            "Zm:", "Zm:x", "Cmn:3", "Cmn:1,1", "box:Zm:3", "torus", "point:1", "cone:",
        ] {
            assert!(parse_family(bad).is_err(), "{bad}");
        }
    }
}
