//! Recognition of Cartan types and the canonical (Bourbaki) ordering of simple roots.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Self {
        SimpleType { family, rank }
    }

    /// Low-rank coincidences as simple factors: `B1 = C1 = A1`, `C2 = B2`, `D3 = A3`.
    /// `D2` is not simple and is split by [`CartanType::new`].
    fn normalized(self) -> Self {
        use Family::*;
        match (self.family, self.rank) {
            (B, 1) | (C, 1) => SimpleType::new(A, 1),
            (C, 2) => SimpleType::new(B, 2),
            (D, 3) => SimpleType::new(A, 3),
            _ => self,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}{}", self.family, self.rank)
    }
}

/// A product of simple types, in the order the factors occur.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    components: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(components: impl IntoIterator<Item = SimpleType>) -> Self {
        let mut out = Vec::new();
        for c in components {
            match (c.family, c.rank) {
                (_, 0) => {}
                (Family::D, 1) => {}
                (Family::D, 2) => {
                    out.push(SimpleType::new(Family::A, 1));
                    out.push(SimpleType::new(Family::A, 1));
                }
                _ => out.push(c.normalized()),
            }
        }
        CartanType { components: out }
    }

    pub fn simple(family: Family, rank: usize) -> Self {
        CartanType::new([SimpleType::new(family, rank)])
    }

    pub fn components(&self) -> &[SimpleType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    /// Equality up to reordering of factors.
    pub fn is_isomorphic(&self, other: &CartanType) -> bool {
        let mut a = self.components.clone();
        let mut b = other.components.clone();
        a.sort();
        b.sort();
        a == b
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "trivial");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, "×")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses labels such as `"F4"`, `"B2×B3"` or `"B2xB3"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "trivial" || s.is_empty() {
            return Ok(CartanType::new([]));
        }
        let mut comps = Vec::new();
        for part in s.split(['×', 'x', '*']) {
            let part = part.trim();
            let bad = || Error::Validation(format!("bad Cartan type `{part}`"));
            let mut chars = part.chars();
            let family = match chars.next().ok_or_else(bad)? {
                'A' => Family::A,
                'B' => Family::B,
                'C' => Family::C,
                'D' => Family::D,
                'E' => Family::E,
                'F' => Family::F,
                'G' => Family::G,
                _ => return Err(bad()),
            };
            let rank: usize = chars.as_str().parse().map_err(|_| bad())?;
            comps.push(SimpleType::new(family, rank));
        }
        Ok(CartanType::new(comps))
    }
}

/// Cartan matrix `⟨α_i, α_j∨⟩` of a simple type in Bourbaki order.
pub fn cartan_matrix(t: SimpleType) -> Result<Vec<Vec<i64>>> {
    use Family::*;
    let n = t.rank;
    let bad = || Error::Validation(format!("no simple type {t}"));
    let valid = match t.family {
        A => n >= 1,
        B | C => n >= 2,
        D => n >= 4,
        E => (6..=8).contains(&n),
        F => n == 4,
        G => n == 2,
    };
    if !valid {
        return Err(bad());
    }
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match t.family {
        A | B | C | F | G => (0..n - 1).for_each(|i| link(i, i + 1)),
        D => {
            (0..n - 2).for_each(|i| link(i, i + 1));
            link(n - 3, n - 1);
        }
        E => {
            link(0, 2);
            link(1, 3);
            (2..n - 1).for_each(|i| link(i, i + 1));
        }
    }
    match t.family {
        B => a[n - 2][n - 1] = -2,
        C => a[n - 1][n - 2] = -2,
        F => a[1][2] = -2,
        G => a[1][0] = -3,
        _ => {}
    }
    Ok(a)
}

/// Recognizes the type of a Cartan matrix and returns, for each connected component,
/// its simple-root indices in Bourbaki order. Ties between symmetric choices go to
/// the lower index.
pub fn recognize(cartan: &[Vec<i64>]) -> Result<(CartanType, Vec<Vec<usize>>)> {
    canonical_order(cartan, |a, b| a.cmp(&b))
}

/// Like [`recognize`], with ties and the order of components decided by `prefer`:
/// `prefer(i, j) == Less` means root `i` should come first.
pub fn canonical_order(
    cartan: &[Vec<i64>],
    prefer: impl Fn(usize, usize) -> Ordering,
) -> Result<(CartanType, Vec<Vec<usize>>)> {
    let n = cartan.len();
    let unrecognized = || Error::UnrecognizedDiagram(cartan.to_vec());
    for i in 0..n {
        if cartan[i][i] != 2 {
            return Err(unrecognized());
        }
        for j in 0..n {
            if i != j && ((cartan[i][j] == 0) != (cartan[j][i] == 0)) {
                return Err(unrecognized());
            }
        }
    }
    let adj = |v: usize| -> Vec<usize> { (0..n).filter(|&w| w != v && cartan[v][w] != 0).collect() };
    // components
    let mut comp_of = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if comp_of[s] != usize::MAX {
            continue;
        }
        let mut members = vec![s];
        comp_of[s] = comps.len();
        let mut k = 0;
        while k < members.len() {
            for w in adj(members[k]) {
                if comp_of[w] == usize::MAX {
                    comp_of[w] = comps.len();
                    members.push(w);
                }
            }
            k += 1;
        }
        comps.push(members);
    }
    let mut typed: Vec<(SimpleType, Vec<usize>)> = Vec::new();
    for members in comps {
        typed.push(order_component(cartan, &members, &adj, &prefer).ok_or_else(unrecognized)?);
    }
    typed.sort_by(|a, b| prefer(a.1[0], b.1[0]));
    let ty = CartanType::new(typed.iter().map(|t| t.0));
    Ok((ty, typed.into_iter().map(|t| t.1).collect()))
}

/// Walk a path from `start` through the vertices of `members`.
fn walk(start: usize, members: &[usize], adj: &dyn Fn(usize) -> Vec<usize>) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj(cur).into_iter().find(|&w| w != prev && members.contains(&w));
        match next {
            Some(w) => {
                prev = cur;
                cur = w;
                path.push(w);
            }
            None => return path,
        }
    }
}

fn order_component(
    cartan: &[Vec<i64>],
    members: &[usize],
    adj: &dyn Fn(usize) -> Vec<usize>,
    prefer: &dyn Fn(usize, usize) -> Ordering,
) -> Option<(SimpleType, Vec<usize>)> {
    use Family::*;
    let n = members.len();
    if n == 1 {
        return Some((SimpleType::new(A, 1), members.to_vec()));
    }
    let edges: usize = members.iter().map(|&v| adj(v).len()).sum::<usize>() / 2;
    if edges != n - 1 {
        return None;
    }
    // ‖α_i‖² > ‖α_j‖² iff |A_ij| > |A_ji|
    let longer = |i: usize, j: usize| cartan[i][j].abs() > cartan[j][i].abs();
    let bond = |i: usize, j: usize| cartan[i][j] * cartan[j][i];
    let best = |mut v: Vec<usize>| -> usize {
        v.sort_by(|&a, &b| prefer(a, b));
        v[0]
    };
    let branch: Vec<usize> = members.iter().copied().filter(|&v| adj(v).len() >= 3).collect();
    if !branch.is_empty() {
        if branch.len() != 1 || adj(branch[0]).len() != 3 {
            return None;
        }
        let b = branch[0];
        if members.iter().any(|&v| adj(v).iter().any(|&w| bond(v, w) != 1)) {
            return None;
        }
        // arms listed from the branch node outward
        let mut arms: Vec<Vec<usize>> = adj(b)
            .into_iter()
            .map(|s| {
                let rest: Vec<usize> = members.iter().copied().filter(|&v| v != b).collect();
                walk(s, &rest, adj)
            })
            .collect();
        arms.sort_by_key(|a| a.len());
        let lens: Vec<usize> = arms.iter().map(|a| a.len()).collect();
        return match lens.as_slice() {
            [1, 1, k] => {
                let mut order: Vec<usize>;
                if *k == 1 {
                    let first = best(arms.iter().map(|a| a[0]).collect());
                    let mut rest: Vec<usize> = arms.iter().map(|a| a[0]).filter(|&v| v != first).collect();
                    rest.sort_by(|&x, &y| prefer(x, y));
                    order = vec![first, b];
                    order.extend(rest);
                } else {
                    order = arms[2].iter().rev().copied().collect();
                    order.push(b);
                    let mut leaves = vec![arms[0][0], arms[1][0]];
                    leaves.sort_by(|&x, &y| prefer(x, y));
                    order.extend(leaves);
                }
                Some((SimpleType::new(D, n), order))
            }
            [1, 2, k] if (2..=4).contains(k) => {
                let (short_arm, long_arm) = if *k == 2 {
                    let first = best(vec![arms[1][1], arms[2][1]]);
                    if arms[1][1] == first {
                        (arms[1].clone(), arms[2].clone())
                    } else {
                        (arms[2].clone(), arms[1].clone())
                    }
                } else {
                    (arms[1].clone(), arms[2].clone())
                };
                let mut order = vec![short_arm[1], arms[0][0], short_arm[0], b];
                order.extend(long_arm);
                Some((SimpleType::new(E, n), order))
            }
            _ => None,
        };
    }
    let ends: Vec<usize> = members.iter().copied().filter(|&v| adj(v).len() == 1).collect();
    if ends.len() != 2 {
        return None;
    }
    let path = walk(ends[0], members, adj);
    let multi: Vec<usize> = (0..n - 1).filter(|&k| bond(path[k], path[k + 1]) > 1).collect();
    match multi.as_slice() {
        [] => {
            let start = best(ends.clone());
            Some((SimpleType::new(A, n), walk(start, members, adj)))
        }
        [k] => {
            let (i, j) = (path[*k], path[*k + 1]);
            match bond(i, j) {
                3 if n == 2 => {
                    let (s, l) = if longer(i, j) { (j, i) } else { (i, j) };
                    Some((SimpleType::new(G, 2), vec![s, l]))
                }
                2 if n == 2 => {
                    let (l, s) = if longer(i, j) { (i, j) } else { (j, i) };
                    Some((SimpleType::new(B, 2), vec![l, s]))
                }
                2 if *k == 0 || *k == n - 2 => {
                    // start from the end away from the double bond
                    let p: Vec<usize> = if *k == n - 2 {
                        path.clone()
                    } else {
                        path.iter().rev().copied().collect()
                    };
                    let (a, z) = (p[n - 2], p[n - 1]);
                    let fam = if longer(a, z) { B } else { C };
                    Some((SimpleType::new(fam, n), p))
                }
                2 if n == 4 && *k == 1 => {
                    // long end first
                    let p: Vec<usize> = if longer(path[1], path[2]) {
                        path.clone()
                    } else {
                        path.iter().rev().copied().collect()
                    };
                    Some((SimpleType::new(F, 4), p))
                }
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_normalize() {
        let t: CartanType = "B1×B3".parse().unwrap();
        assert_eq!(t.to_string(), "A1×B3");
        let d2: CartanType = "D2".parse().unwrap();
        assert!(d2.is_isomorphic(&"A1xA1".parse().unwrap()));
        assert!("C2"
            .parse::<CartanType>()
            .unwrap()
            .is_isomorphic(&"B2".parse().unwrap()));
    }

    #[test]
    fn recognizes_f4_in_bourbaki_order() {
        // F4 in a scrambled order: long roots at indices 2 and 0, short at 1 and 3.
        let a = vec![
            vec![2, 0, -1, 0],
            vec![0, 2, -1, -1],
            vec![-1, -2, 2, 0],
            vec![0, -1, 0, 2],
        ];
        let (t, order) = recognize(&a).unwrap();
        assert_eq!(t.to_string(), "F4");
        assert_eq!(order, vec![vec![0, 2, 1, 3]]);
    }

    #[test]
    fn distinguishes_b_and_c() {
        // B3: α3 short, ⟨α2, α3∨⟩ = -2
        let b3 = vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]];
        let c3 = vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -2, 2]];
        assert_eq!(recognize(&b3).unwrap().0.to_string(), "B3");
        assert_eq!(recognize(&c3).unwrap().0.to_string(), "C3");
    }

    #[test]
    fn standard_matrices_round_trip() {
        for t in [
            "A1", "A4", "B2", "B5", "C3", "C6", "D4", "D6", "E6", "E7", "E8", "F4", "G2",
        ] {
            let ty: CartanType = t.parse().unwrap();
            let a = cartan_matrix(ty.components()[0]).unwrap();
            let (found, order) = recognize(&a).unwrap();
            assert_eq!(found, ty, "{t}");
            assert_eq!(order[0], (0..a.len()).collect::<Vec<_>>(), "{t}");
        }
    }

    #[test]
    fn rejects_cycles() {
        let a = vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]];
        assert!(matches!(recognize(&a), Err(Error::UnrecognizedDiagram(_))));
    }
}
