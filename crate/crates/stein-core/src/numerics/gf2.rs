use alloc::vec::Vec;

/// Solution set `particular + span(basis)` of a linear system over GF(2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf2Affine {
    pub particular: Vec<bool>,
    pub basis: Vec<Vec<bool>>,
}

impl Gf2Affine {
    pub fn nullity(&self) -> usize {
        self.basis.len()
    }

    /// All solutions, ordered by the binary counter over the basis.
    pub fn solutions(&self) -> Vec<Vec<bool>> {
        let k = self.basis.len();
        assert!(k < 30, "refusing to enumerate 2^{k} solutions");
        (0u32..(1 << k))
            .map(|mask| {
                let mut x = self.particular.clone();
                for (b, v) in self.basis.iter().enumerate() {
                    if mask >> b & 1 == 1 {
                        for (xi, vi) in x.iter_mut().zip(v) {
                            *xi ^= *vi;
                        }
                    }
                }
                x
            })
            .collect()
    }
}

/// Solves `A x = b` over GF(2); `None` when inconsistent.
pub fn solve_gf2_affine(a: &[Vec<bool>], b: &[bool]) -> Option<Gf2Affine> {
    assert_eq!(a.len(), b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<bool>> = a
        .iter()
        .zip(b)
        .map(|(row, &x)| {
            let mut r = row.clone();
            r.push(x);
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..m.len()).find(|&i| m[i][col]) else {
            continue;
        };
        m.swap(row, p);
        for i in 0..m.len() {
            if i != row && m[i][col] {
                let src = m[row].clone();
                for (x, y) in m[i].iter_mut().zip(src) {
                    *x ^= y;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if m[row..].iter().any(|r| r[cols]) {
        return None;
    }
    let mut particular = alloc::vec![false; cols];
    for (r, &pc) in pivots.iter().enumerate() {
        particular[pc] = m[r][cols];
    }
    let basis = (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = alloc::vec![false; cols];
            v[f] = true;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m[r][f];
            }
            v
        })
        .collect();
    Some(Gf2Affine { particular, basis })
}
