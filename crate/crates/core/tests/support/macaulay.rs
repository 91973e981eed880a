//! Ideal membership by linear algebra on a Macaulay matrix, with its own
//! mod-p elimination. Only sound up to the degree cap.

use std::collections::HashMap;

use suppkit::poly::Polynomial;

fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for e in 0..=d {
        for mut rest in monomials_up_to(n - 1, d - e) {
            rest.insert(0, e);
            out.push(rest);
        }
    }
    out
}

fn residue(c: &suppkit::field::Scalar) -> u64 {
    c.residue().expect("prime field")
}

fn inv(a: u64, p: u64) -> u64 {
    let mut r = 1;
    let (mut b, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Is f a combination Σ m_j g_{i_j} with every deg(m_j g_{i_j}) ≤ cap?
pub fn macaulay_member(gens: &[Polynomial], f: &Polynomial, cap: u32, p: u64) -> bool {
    let n = f.ring().nvars();
    let cols = monomials_up_to(n, cap);
    let index: HashMap<&[u32], usize> = cols.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let vector = |terms: Vec<(Vec<u32>, u64)>| -> Option<Vec<u64>> {
        let mut v = vec![0; cols.len()];
        for (m, c) in terms {
            let &i = index.get(m.as_slice())?;
            v[i] = (v[i] + c) % p;
        }
        Some(v)
    };
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for g in gens.iter().filter(|g| !g.is_zero()) {
        for m in &cols {
            let shifted: Vec<(Vec<u32>, u64)> = g
                .terms()
                .map(|(t, c)| (t.exps().iter().zip(m).map(|(a, b)| a + b).collect(), residue(c)))
                .collect();
            if let Some(v) = vector(shifted) {
                rows.push(v);
            }
        }
    }
    let Some(mut target) = vector(f.terms().map(|(t, c)| (t.exps().to_vec(), residue(c))).collect()) else {
        return false;
    };
    // echelon form, pivot per column
    let mut pivots: Vec<(usize, Vec<u64>)> = Vec::new();
    for mut r in rows {
        for (col, pr) in &pivots {
            let c = r[*col];
            if c != 0 {
                for k in 0..r.len() {
                    r[k] = (r[k] + (p - c) * pr[k]) % p;
                }
            }
        }
        if let Some(col) = r.iter().position(|&c| c != 0) {
            let s = inv(r[col], p);
            for x in r.iter_mut() {
                *x = *x * s % p;
            }
            for (_, pr) in pivots.iter_mut() {
                let c = pr[col];
                if c != 0 {
                    for k in 0..pr.len() {
                        pr[k] = (pr[k] + (p - c) * r[k]) % p;
                    }
                }
            }
            pivots.push((col, r));
        }
    }
    for (col, pr) in &pivots {
        let c = target[*col];
        if c != 0 {
            for k in 0..target.len() {
                target[k] = (target[k] + (p - c) * pr[k]) % p;
            }
        }
    }
    target.iter().all(|&c| c == 0)
}
