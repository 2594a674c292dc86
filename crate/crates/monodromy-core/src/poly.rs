//! Univariate polynomials over `F_p`, coefficients from the constant term up.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{Field, Fp};

pub type Poly = Vec<u64>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// `None` for the zero polynomial.
pub fn degree(a: &[u64]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn eval(f: &Fp, a: &[u64], x: u64) -> u64 {
    a.iter().rev().fold(0, |acc, c| f.mul_add(c, &acc, &x))
}

pub fn mul(f: &Fp, a: &[u64], b: &[u64]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = f.mul_add(&out[i + j], x, y);
        }
    }
    trim(out)
}

pub fn sub(f: &Fp, a: &[u64], b: &[u64]) -> Poly {
    let n = a.len().max(b.len());
    trim(
        (0..n)
            .map(|i| f.sub(a.get(i).unwrap_or(&0), b.get(i).unwrap_or(&0)))
            .collect(),
    )
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem(f: &Fp, a: &[u64], b: &[u64]) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = f.inv(&b[db]).expect("leading coefficient is nonzero");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0; r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = f.mul(&r[dr], &lead_inv);
        q[dr - db] = c;
        for (i, bi) in b[..=db].iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = f.sub(&r[idx], &f.mul(&c, bi));
        }
        r = trim(r);
    }
    (trim(q), r)
}

pub fn monic(f: &Fp, a: &[u64]) -> Poly {
    let a = trim(a.to_vec());
    match a.last() {
        None => a,
        Some(&lead) => {
            let inv = f.inv(&lead).expect("leading coefficient is nonzero");
            a.iter().map(|c| f.mul(c, &inv)).collect()
        }
    }
}

pub fn gcd(f: &Fp, a: &[u64], b: &[u64]) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let (_, r) = divrem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

pub fn powmod(f: &Fp, base: &[u64], mut e: u64, m: &[u64]) -> Poly {
    let mut acc = divrem(f, &[1], m).1;
    let mut b = divrem(f, base, m).1;
    while e > 0 {
        if e & 1 == 1 {
            acc = divrem(f, &mul(f, &acc, &b), m).1;
        }
        b = divrem(f, &mul(f, &b, &b), m).1;
        e >>= 1;
    }
    acc
}

/// Distinct-degree parts `(d, g_d)` where `g_d` is the product of the
/// distinct monic irreducible factors of `a` of degree exactly `d`.
pub fn distinct_degree_parts(f: &Fp, a: &[u64]) -> Vec<(usize, Poly)> {
    let mut rest = monic(f, a);
    let mut parts = Vec::new();
    let mut xq: Poly = vec![0, 1];
    let mut d = 0;
    while degree(&rest).unwrap_or(0) > 0 {
        d += 1;
        if 2 * d > degree(&rest).unwrap_or(0) {
            let sqfree = squarefree_kernel(f, &rest);
            let n = degree(&sqfree).unwrap_or(0);
            parts.push((n, sqfree));
            break;
        }
        xq = powmod(f, &xq, f.modulus(), &rest);
        let g = gcd(f, &rest, &sub(f, &xq, &[0, 1]));
        if degree(&g).unwrap_or(0) > 0 {
            loop {
                let common = gcd(f, &rest, &g);
                if degree(&common).unwrap_or(0) == 0 {
                    break;
                }
                rest = divrem(f, &rest, &common).0;
            }
            xq = divrem(f, &xq, &rest).1;
            parts.push((d, g));
        }
    }
    parts
}

/// Product of the distinct irreducible factors of `a`, assuming all of
/// them have the same degree.
fn squarefree_kernel(f: &Fp, a: &[u64]) -> Poly {
    let mut g = monic(f, a);
    loop {
        let deriv: Poly = trim(g.iter().enumerate().skip(1).map(|(i, c)| f.mul(c, &f.from_i64(i as i64))).collect());
        if deriv.is_empty() {
            // Only when p divides every exponent; degrees here stay below p.
            return g;
        }
        let common = gcd(f, &g, &deriv);
        if degree(&common).unwrap_or(0) == 0 {
            return g;
        }
        g = divrem(f, &g, &common).0;
    }
}

/// Roots in `F_p` with multiplicities, sorted by root. Distinct-degree
/// splitting against `x^p - x`, then Cantor-Zassenhaus with a fixed seed.
pub fn roots(f: &Fp, a: &[u64]) -> Vec<(u64, usize)> {
    let a = monic(f, a);
    if degree(&a).unwrap_or(0) == 0 {
        return Vec::new();
    }
    let p = f.modulus();
    let mut found = Vec::new();
    if p <= 256 {
        found = (0..p).filter(|&x| eval(f, &a, x) == 0).collect();
    } else {
        let xp = powmod(f, &[0, 1], p, &a);
        let split = gcd(f, &a, &sub(f, &xp, &[0, 1]));
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        split_linear(f, &split, &mut rng, &mut found);
        found.sort_unstable();
    }
    found
        .into_iter()
        .map(|r| {
            let mut mult = 0;
            let mut rest = a.clone();
            loop {
                let (q, rem) = divrem(f, &rest, &[f.neg(&r), 1]);
                if !rem.is_empty() {
                    break;
                }
                mult += 1;
                rest = q;
            }
            (r, mult)
        })
        .collect()
}

fn split_linear(f: &Fp, g: &[u64], rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    match degree(g) {
        None | Some(0) => {}
        Some(1) => out.push(f.neg(&f.mul(&g[0], &f.inv(&g[1]).expect("degree one")))),
        Some(d) => loop {
            let shift = rng.gen_range(0..f.modulus());
            let h = powmod(f, &[shift, 1], (f.modulus() - 1) / 2, g);
            let h = gcd(f, g, &sub(f, &h, &[1]));
            let dh = degree(&h).unwrap_or(0);
            if dh > 0 && dh < d {
                let (q, _) = divrem(f, g, &h);
                split_linear(f, &h, rng, out);
                split_linear(f, &q, rng, out);
                return;
            }
        },
    }
}
