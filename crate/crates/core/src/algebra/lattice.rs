//! The lattice of basic extensions of C(X, tau, g).
//!
//! Each divisor n of ord(g) yields the extension C(X, tau^(n), g^(n)),
//! the fixed algebra of sigma^(n); m | n gives the inclusion
//! C(X, tau^(m), g^(m)) into C(X, tau^(n), g^(n)). Edges are the Hasse
//! covers (n/m prime).

use super::AlgebraSpec;
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct LatticeNode {
    /// Divisor of ord(g) indexing this extension.
    pub n: usize,
    pub spec: AlgebraSpec,
}

#[derive(Clone, Debug)]
pub struct Lattice {
    pub nodes: Vec<LatticeNode>,
    /// Hasse inclusion edges as (lower node index, upper node index),
    /// lower algebra contained in upper.
    pub edges: Vec<(usize, usize)>,
}

pub fn lattice(spec: &AlgebraSpec) -> Result<Lattice> {
    spec.require_valid()?;
    let ord = spec.g.ord();
    let divisors: Vec<usize> = (1..=ord).filter(|d| ord % d == 0).collect();
    let nodes: Vec<LatticeNode> = divisors
        .iter()
        .map(|&n| LatticeNode {
            n,
            spec: spec.power(n),
        })
        .collect();
    let mut edges = Vec::new();
    for (i, &m) in divisors.iter().enumerate() {
        for (j, &n) in divisors.iter().enumerate() {
            if n > m && n % m == 0 && is_prime(n / m) {
                edges.push((i, j));
            }
        }
    }
    Ok(Lattice { nodes, edges })
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{is_member, Endo, FnTable, StoneSpace};
    use crate::cyclo::{Cyclo, CycloField};
    use crate::galois::{FieldId, GaloisAut, Value};

    fn zeta14_spec() -> AlgebraSpec {
        AlgebraSpec::new(
            StoneSpace::of_size(6),
            Endo::cycle(6),
            GaloisAut::generator(FieldId::Zeta14),
        )
        .unwrap()
    }

    #[test]
    fn zeta14_lattice_has_four_nodes_and_four_edges() {
        let lat = lattice(&zeta14_spec()).unwrap();
        let ns: Vec<usize> = lat.nodes.iter().map(|n| n.n).collect();
        assert_eq!(ns, vec![1, 2, 3, 6]);
        let mut edges = lat.edges.clone();
        edges.sort();
        // 1 < 2, 1 < 3, 2 < 6, 3 < 6
        assert_eq!(edges, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn order_two_gives_a_chain() {
        let spec = AlgebraSpec::new(
            StoneSpace::of_size(2),
            Endo::cycle(2),
            GaloisAut::generator(FieldId::Q5Sqrt2),
        )
        .unwrap();
        let lat = lattice(&spec).unwrap();
        assert_eq!(lat.nodes.len(), 2);
        assert_eq!(lat.edges, vec![(0, 1)]);
    }

    #[test]
    fn bottom_members_belong_to_every_extension() {
        let spec = zeta14_spec();
        let lat = lattice(&spec).unwrap();
        // A member of the bottom algebra: pick a value at x0 and propagate
        // through the 6-cycle by g.
        let v = Value::Cyclo(
            Cyclo::zeta(CycloField::Zeta14).add(&Cyclo::from_i64(CycloField::Zeta14, 2)),
        );
        let mut values = vec![v.clone()];
        for i in 1..6 {
            values.push(spec.g.apply(&values[i - 1]));
        }
        let f = FnTable::new(values);
        assert!(is_member(&f, &spec).unwrap().ok);
        for node in &lat.nodes {
            assert!(
                is_member(&f, &node.spec).unwrap().ok,
                "not a member at n = {}",
                node.n
            );
        }
    }

    #[test]
    fn constants_of_each_node_form_the_expected_fixed_field() {
        // Constants of C(X, tau^(n), g^(n)) are the elements fixed by g^(n):
        // sqrt5-type traces appear exactly from the right level down.
        let spec = AlgebraSpec::new(
            StoneSpace::of_size(4),
            Endo::cycle(4),
            GaloisAut::generator(FieldId::Zeta10),
        )
        .unwrap();
        let lat = lattice(&spec).unwrap();
        let s5 = Value::Cyclo(crate::cyclo::sqrt5());
        for node in &lat.nodes {
            let constant = FnTable::constant(&node.spec, s5.clone());
            let member = is_member(&constant, &node.spec).unwrap().ok;
            // sqrt5 is fixed by g^(2) and g^(4) but not by g.
            assert_eq!(member, node.n % 2 == 0, "node {}", node.n);
        }
    }
}
