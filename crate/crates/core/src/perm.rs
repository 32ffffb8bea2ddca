//! Permutations of {1..r}, integer partitions, Young tableaux, hook-length
//! dimensions and the one-box Pieri product.

use std::fmt;

/// A permutation of {1..r} in one-line notation: `images[i-1] = p(i)`.
///
/// Composition follows `(p ∘ q)(i) = p(q(i))`; the derived `Ord` is the
/// lexicographic order on one-line notation, which fixes the enumeration
/// order used by the identity-system columns.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermError {
    #[error("one-line notation {0:?} is not a bijection of 1..={1}")]
    NotBijective(Vec<usize>, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (1..=degree).collect(),
        }
    }

    /// Builds from one-line notation `[p(1), ..., p(r)]` (1-based values).
    pub fn from_one_line(images: Vec<usize>) -> Result<Self, PermError> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &v in &images {
            if v == 0 || v > r || seen[v - 1] {
                return Err(PermError::NotBijective(images.clone(), r));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition swapping `a` and `b` inside S_degree.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        assert!(a >= 1 && b >= 1 && a <= degree && b <= degree && a != b);
        let mut images: Vec<usize> = (1..=degree).collect();
        images.swap(a - 1, b - 1);
        Permutation { images }
    }

    /// Builds from disjoint cycles, e.g. `(1 3)` as `&[vec![1, 3]]`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (1..=degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for &v in cycle {
                if v == 0 || v > degree || touched[v - 1] {
                    return Err(PermError::NotBijective(cycle.clone(), degree));
                }
                touched[v - 1] = true;
            }
            for (k, &v) in cycle.iter().enumerate() {
                images[v - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `p(i)` with 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn one_line(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &v)| v == k + 1)
    }

    /// `self ∘ other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: (1..=self.degree()).map(|i| self.apply(other.apply(i))).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Parity: +1 or -1.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.degree()];
        let mut sign = 1;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k] - 1;
                len += 1;
            }
            if len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Extends by fixed points up to `degree`.
    pub fn embed(&self, degree: usize) -> Permutation {
        assert!(degree >= self.degree(), "cannot embed into a smaller group");
        let mut images = self.images.clone();
        images.extend(self.degree() + 1..=degree);
        Permutation { images }
    }

    /// All of S_r in lexicographic one-line order.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=degree).collect();
        loop {
            out.push(Permutation { images: current.clone() });
            if !next_permutation(&mut current) {
                break;
            }
        }
        out
    }

    /// The arrangement pattern of a sequence of distinct values: entry `m` is
    /// the rank (1-based) of `values[m]` within the sorted values.
    pub fn rank_pattern(values: &[usize]) -> Permutation {
        let mut images = Vec::with_capacity(values.len());
        for &v in values {
            let rank = 1 + values.iter().filter(|&&w| w < v).count();
            images.push(rank);
        }
        Permutation { images }
    }
}

fn next_permutation(a: &mut [usize]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, v) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A partition of r: weakly decreasing positive parts.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, String> {
        if parts.is_empty() {
            return Err("empty partition".into());
        }
        if parts.iter().any(|&p| p == 0) {
            return Err(format!("zero part in {parts:?}"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn of(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).unwrap()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    /// Column lengths (the conjugate partition's parts).
    pub fn column_lengths(&self) -> Vec<usize> {
        let cols = self.parts[0];
        (1..=cols)
            .map(|c| self.parts.iter().filter(|&&p| p >= c).count())
            .collect()
    }

    /// Irreducible dimension d_λ = r! / Π hook lengths.
    pub fn hook_dimension(&self) -> usize {
        let cols = self.column_lengths();
        let mut numer: u128 = 1;
        for k in 1..=self.sum() {
            numer *= k as u128;
        }
        let mut hooks: u128 = 1;
        for (i, &len) in self.parts.iter().enumerate() {
            for j in 0..len {
                let arm = len - 1 - j;
                let leg = cols[j] - 1 - i;
                hooks *= (arm + leg + 1) as u128;
            }
        }
        assert!(numer % hooks == 0, "hook product must divide r!");
        (numer / hooks) as usize
    }

    /// The one-box Pieri product [λ][1]: all partitions of r+1 obtained by
    /// adding a single box in a valid position.
    pub fn pieri_product(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..=self.parts.len() {
            let mut parts = self.parts.clone();
            if row == self.parts.len() {
                parts.push(1);
            } else {
                parts[row] += 1;
            }
            if Partition::new(parts.clone()).is_ok() {
                let cand = Partition { parts };
                if !out.contains(&cand) {
                    out.push(cand);
                }
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All partitions of r in descending lexicographic order, so (r) comes first
/// and (1^r) last.
pub fn partitions(r: usize) -> Vec<Partition> {
    assert!(r >= 1);
    let mut out = Vec::new();
    let mut stack = vec![(Vec::<usize>::new(), r, r)];
    while let Some((prefix, remaining, max)) = stack.pop() {
        if remaining == 0 {
            out.push(Partition { parts: prefix });
            continue;
        }
        // push smaller first so larger parts are popped first
        for next in 1..=remaining.min(max) {
            let mut p = prefix.clone();
            p.push(next);
            stack.push((p, remaining - next, next));
        }
    }
    out
}

/// A filling of a Young frame by 1..r, each exactly once.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YoungTableau {
    frame: Partition,
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self, String> {
        let frame = Partition::new(rows.iter().map(Vec::len).collect())?;
        let r = frame.sum();
        let mut seen = vec![false; r];
        for row in &rows {
            for &e in row {
                if e == 0 || e > r || seen[e - 1] {
                    return Err(format!("entries must be 1..={r}, each exactly once"));
                }
                seen[e - 1] = true;
            }
        }
        Ok(YoungTableau { frame, rows })
    }

    pub fn frame(&self) -> &Partition {
        &self.frame
    }

    pub fn size(&self) -> usize {
        self.frame.sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        let ncols = self.frame.parts()[0];
        (0..ncols)
            .map(|c| self.rows.iter().filter_map(|row| row.get(c).copied()).collect())
            .collect()
    }

    /// Rows and columns strictly increasing.
    pub fn is_standard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] < w[1]));
        let cols_ok = self
            .columns()
            .iter()
            .all(|col| col.windows(2).all(|w| w[0] < w[1]));
        rows_ok && cols_ok
    }

    /// Row-reading word: concatenation of the rows, top to bottom.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Relabels every entry by `p`.
    pub fn relabel(&self, p: &Permutation) -> YoungTableau {
        assert_eq!(p.degree(), self.size());
        YoungTableau {
            frame: self.frame.clone(),
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|&e| p.apply(e)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, row) in self.rows.iter().enumerate() {
            if k > 0 {
                write!(f, " / ")?;
            }
            let cells: Vec<String> = row.iter().map(|e| e.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// All standard tableaux of the frame, ordered lexicographically by
/// row-reading word.
pub fn standard_tableaux(frame: &Partition) -> Vec<YoungTableau> {
    let r = frame.sum();
    let mut filled: Vec<Vec<usize>> = frame.parts().iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fill_standard(frame, r, 1, &mut filled, &mut out);
    out.sort_by_key(YoungTableau::row_word);
    out
}

fn fill_standard(
    frame: &Partition,
    r: usize,
    next: usize,
    filled: &mut Vec<Vec<usize>>,
    out: &mut Vec<YoungTableau>,
) {
    if next > r {
        out.push(YoungTableau {
            frame: frame.clone(),
            rows: filled.clone(),
        });
        return;
    }
    for row in 0..frame.rows() {
        let col = filled[row].len();
        let row_open = col < frame.parts()[row];
        let col_open = row == 0 || filled[row - 1].len() > col;
        if row_open && col_open {
            filled[row].push(next);
            fill_standard(frame, r, next + 1, filled, out);
            filled[row].pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(images: &[usize]) -> Permutation {
        Permutation::from_one_line(images.to_vec()).unwrap()
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[1, 2, 3]).compose(&p(&[3, 1, 2])).unwrap(), p(&[3, 1, 2]));
        // pointwise: p(q(1)) = p(1) = 2, p(q(2)) = p(3) = 1, p(q(3)) = p(2) = 3
        assert_eq!(p(&[2, 3, 1]).compose(&p(&[1, 3, 2])).unwrap(), p(&[2, 1, 3]));
        assert_eq!(p(&[3, 2, 1]).compose(&p(&[3, 2, 1])).unwrap(), Permutation::identity(3));
        assert!(matches!(
            p(&[1, 2]).compose(&p(&[1, 2, 3])),
            Err(PermError::DegreeMismatch(2, 3))
        ));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p(&[1, 2, 3]).inverse(), p(&[1, 2, 3]));
        assert_eq!(p(&[2, 3, 1]).inverse(), p(&[3, 1, 2]));
        assert_eq!(p(&[3, 2, 1]).inverse(), p(&[3, 2, 1]));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p(&[1, 2, 3]).sign(), 1);
        assert_eq!(p(&[3, 2, 1]).sign(), -1);
        assert_eq!(p(&[2, 3, 1]).sign(), 1);
    }

    fn sign_by_inversions(q: &Permutation) -> i64 {
        let mut inv = 0;
        let o = q.one_line();
        for i in 0..o.len() {
            for j in i + 1..o.len() {
                if o[i] > o[j] {
                    inv += 1;
                }
            }
        }
        if inv % 2 == 0 {
            1
        } else {
            -1
        }
    }

    #[test]
    fn sign_matches_inversion_count_and_is_multiplicative() {
        for a in Permutation::all(4) {
            assert_eq!(a.sign(), sign_by_inversions(&a));
            for b in Permutation::all(4) {
                let ab = a.compose(&b).unwrap();
                assert_eq!(ab.sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn group_axioms_exhaustive_s4() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        let id = Permutation::identity(4);
        for a in &all {
            assert_eq!(a.compose(&a.inverse()).unwrap(), id);
            assert_eq!(a.compose(&id).unwrap(), *a);
            for b in &all {
                for c in &all {
                    let left = a.compose(&b.compose(c).unwrap()).unwrap();
                    let right = a.compose(b).unwrap().compose(c).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn lexicographic_enumeration_for_s3() {
        let expected: Vec<Permutation> = [
            [1, 2, 3],
            [1, 3, 2],
            [2, 1, 3],
            [2, 3, 1],
            [3, 1, 2],
            [3, 2, 1],
        ]
        .iter()
        .map(|o| p(o))
        .collect();
        assert_eq!(Permutation::all(3), expected);
    }

    #[test]
    fn cycles_and_transpositions() {
        assert_eq!(Permutation::from_cycles(3, &[vec![1, 3]]).unwrap(), p(&[3, 2, 1]));
        assert_eq!(Permutation::transposition(3, 1, 3), p(&[3, 2, 1]));
        assert_eq!(Permutation::from_cycles(4, &[vec![1, 2, 3]]).unwrap(), p(&[2, 3, 1, 4]));
    }

    #[test]
    fn embedding_adds_fixed_points() {
        assert_eq!(p(&[2, 3, 1]).embed(4), p(&[2, 3, 1, 4]));
        assert_eq!(Permutation::identity(3).embed(4), Permutation::identity(4));
    }

    #[test]
    fn hook_dimensions_for_r3() {
        assert_eq!(Partition::of(&[3]).hook_dimension(), 1);
        assert_eq!(Partition::of(&[2, 1]).hook_dimension(), 2);
        assert_eq!(Partition::of(&[1, 1, 1]).hook_dimension(), 1);
        assert_eq!(Partition::of(&[2, 2]).hook_dimension(), 2);
        assert_eq!(Partition::of(&[3, 2]).hook_dimension(), 5);
    }

    #[test]
    fn standard_tableau_counts_match_hook_formula() {
        for r in 1..=6 {
            for frame in partitions(r) {
                assert_eq!(
                    standard_tableaux(&frame).len(),
                    frame.hook_dimension(),
                    "frame {frame}"
                );
            }
        }
    }

    /// Brute-force oracle: every bijective filling, filtered by standardness.
    fn standard_by_bruteforce(frame: &Partition) -> Vec<YoungTableau> {
        let r = frame.sum();
        let mut out = Vec::new();
        for perm in Permutation::all(r) {
            let mut rows = Vec::new();
            let mut k = 0;
            for &len in frame.parts() {
                rows.push(perm.one_line()[k..k + len].to_vec());
                k += len;
            }
            let t = YoungTableau::from_rows(rows).unwrap();
            if t.is_standard() {
                out.push(t);
            }
        }
        out.sort_by_key(YoungTableau::row_word);
        out
    }

    #[test]
    fn standard_tableaux_match_bruteforce() {
        for r in 1..=5 {
            for frame in partitions(r) {
                assert_eq!(standard_tableaux(&frame), standard_by_bruteforce(&frame));
            }
        }
    }

    #[test]
    fn standard_tableaux_named_cases() {
        let t22 = standard_tableaux(&Partition::of(&[2, 2]));
        let target = YoungTableau::from_rows(vec![vec![1, 3], vec![2, 4]]).unwrap();
        assert!(t22.contains(&target));

        let t111 = standard_tableaux(&Partition::of(&[1, 1, 1]));
        assert_eq!(t111, vec![YoungTableau::from_rows(vec![vec![1], vec![2], vec![3]]).unwrap()]);

        let t21 = standard_tableaux(&Partition::of(&[2, 1]));
        assert_eq!(
            t21,
            vec![
                YoungTableau::from_rows(vec![vec![1, 2], vec![3]]).unwrap(),
                YoungTableau::from_rows(vec![vec![1, 3], vec![2]]).unwrap(),
            ]
        );
    }

    #[test]
    fn wedderburn_dimension_count() {
        let mut factorial = 1usize;
        for r in 1..=6 {
            factorial *= r;
            let total: usize = partitions(r).iter().map(|l| l.hook_dimension().pow(2)).sum();
            assert_eq!(total, factorial, "sum of squares at r = {r}");
        }
    }

    #[test]
    fn pieri_products() {
        assert_eq!(
            Partition::of(&[3]).pieri_product(),
            vec![Partition::of(&[4]), Partition::of(&[3, 1])]
        );
        assert_eq!(
            Partition::of(&[2, 1]).pieri_product(),
            vec![
                Partition::of(&[3, 1]),
                Partition::of(&[2, 2]),
                Partition::of(&[2, 1, 1])
            ]
        );
        assert_eq!(
            Partition::of(&[1, 1, 1]).pieri_product(),
            vec![Partition::of(&[2, 1, 1]), Partition::of(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn only_two_one_produces_the_square() {
        let square = Partition::of(&[2, 2]);
        for l in partitions(3) {
            let has = l.pieri_product().contains(&square);
            assert_eq!(has, l == Partition::of(&[2, 1]), "partition {l}");
        }
    }

    #[test]
    fn partition_enumeration_order() {
        assert_eq!(
            partitions(4),
            vec![
                Partition::of(&[4]),
                Partition::of(&[3, 1]),
                Partition::of(&[2, 2]),
                Partition::of(&[2, 1, 1]),
                Partition::of(&[1, 1, 1, 1]),
            ]
        );
    }

    #[test]
    fn rank_pattern_examples() {
        assert_eq!(Permutation::rank_pattern(&[2, 5, 3]), p(&[1, 3, 2]));
        assert_eq!(Permutation::rank_pattern(&[5, 1, 4]), p(&[3, 1, 2]));
    }
}
