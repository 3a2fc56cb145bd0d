#![allow(dead_code)]

use std::path::PathBuf;
use std::sync::Arc;

use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use superhaar::io::{parse_algebra_json, parse_module_json};
use superhaar::scalar::{int, ratio};
use superhaar::{GradedModule, LieSuperalgebra, Matrix, Scalar};

pub const ALGEBRAS: [&str; 6] = [
    "bad2",
    "g2_grassmann",
    "g3_grassmann",
    "gl11",
    "osp12",
    "sl2",
];

pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures"))
}

pub fn algebra_path(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.json"))
}

pub fn module_paths(name: &str) -> Vec<PathBuf> {
    let dir = fixtures_dir().join("modules").join(name);
    let mut paths: Vec<_> = std::fs::read_dir(dir)
        .map(|it| it.map(|e| e.unwrap().path()).collect())
        .unwrap_or_default();
    paths.sort();
    paths
}

pub fn load(name: &str) -> Arc<LieSuperalgebra> {
    let text = std::fs::read_to_string(algebra_path(name)).unwrap();
    Arc::new(parse_algebra_json(&text).unwrap().to_algebra().unwrap())
}

pub fn load_module(alg: &LieSuperalgebra, module: &str) -> GradedModule {
    let path = fixtures_dir()
        .join("modules")
        .join(alg.name())
        .join(format!("{module}.json"));
    let text = std::fs::read_to_string(path).unwrap();
    parse_module_json(&text).unwrap().to_module(alg).unwrap()
}

pub fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("{prefix}{i}")).collect()
}

/// Purely odd abelian algebra on `m` generators.
pub fn grassmann(m: usize) -> Arc<LieSuperalgebra> {
    Arc::new(LieSuperalgebra::new(format!("g{m}"), vec![], names("x", m), vec![]).unwrap())
}

/// Exterior algebra module of the purely odd abelian algebra: basis indexed by
/// subsets (bitmasks), `x_i` acting by left wedge multiplication.
pub fn exterior_module(alg: &LieSuperalgebra) -> GradedModule {
    let m = alg.n_odd();
    let d = 1usize << m;
    let parities = (0..d)
        .map(|s| superhaar::Parity::from_bit(s.count_ones() as usize))
        .collect();
    let rho = (0..m)
        .map(|i| {
            let mut mat = Matrix::zeros(d, d);
            for s in 0..d {
                if s >> i & 1 == 0 {
                    let below = (s & ((1 << i) - 1)).count_ones();
                    mat[(s | 1 << i, s)] = if below % 2 == 0 { int(1) } else { int(-1) };
                }
            }
            mat
        })
        .collect();
    GradedModule::new(alg, parities, rho).unwrap()
}

pub fn small_rational(rng: &mut ChaCha8Rng) -> Scalar {
    ratio(rng.gen_range(-3..=3), rng.gen_range(1..=2))
}

/// Random invertible `n × n` rational matrix.
pub fn random_invertible(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    loop {
        let rows = (0..n)
            .map(|_| (0..n).map(|_| small_rational(rng)).collect())
            .collect();
        let m = Matrix::from_rows(rows);
        if m.inverse().is_some() {
            return m;
        }
    }
}

/// Random element of `U(g)` (or of `U(g0)` when `even_only`) built from up to
/// `terms` words of length at most `len`.
pub fn random_element(
    rng: &mut ChaCha8Rng,
    alg: &Arc<LieSuperalgebra>,
    terms: usize,
    len: usize,
    even_only: bool,
) -> superhaar::UEElement {
    let pool: Vec<usize> = if even_only {
        alg.even_indices().collect()
    } else {
        (0..alg.dim()).collect()
    };
    let mut u = superhaar::UEElement::zero(alg);
    for _ in 0..rng.gen_range(1..=terms) {
        let l = if pool.is_empty() {
            0
        } else {
            rng.gen_range(0..=len)
        };
        let word: Vec<usize> = (0..l).map(|_| pool[rng.gen_range(0..pool.len())]).collect();
        u = &u + &superhaar::UEElement::from_word(alg, &word).scale(&small_rational(rng));
    }
    u
}

/// Random homogeneous element: only words whose odd-letter count has the
/// requested parity.
pub fn random_homogeneous(
    rng: &mut ChaCha8Rng,
    alg: &Arc<LieSuperalgebra>,
    parity: superhaar::Parity,
    terms: usize,
    len: usize,
) -> superhaar::UEElement {
    let mut u = superhaar::UEElement::zero(alg);
    let mut added = 0;
    while added < terms {
        let l = rng.gen_range(0..=len);
        let word: Vec<usize> = (0..l).map(|_| rng.gen_range(0..alg.dim())).collect();
        let odd = word.iter().filter(|&&g| alg.parity(g).is_odd()).count();
        if superhaar::Parity::from_bit(odd) != parity {
            if alg.n_odd() == 0 && parity.is_odd() {
                return u;
            }
            continue;
        }
        u = &u + &superhaar::UEElement::from_word(alg, &word).scale(&small_rational(rng));
        added += 1;
    }
    u
}

/// Abelian `g0` acting on the odd part by commuting matrices (polynomials in
/// one random matrix), odd brackets zero.
pub fn abelian_on_module(rng: &mut ChaCha8Rng, n0: usize, m: usize) -> Arc<LieSuperalgebra> {
    let base = Matrix::from_rows(
        (0..m)
            .map(|_| (0..m).map(|_| int(rng.gen_range(-2..=2))).collect())
            .collect(),
    );
    let mut brackets = Vec::new();
    for x in 0..n0 {
        let (a, b) = (int(rng.gen_range(-1..=1)), int(rng.gen_range(-1..=1)));
        let act = &(&base * &base).scale(&a) + &base.scale(&b);
        for v in 0..m {
            let result: Vec<(usize, Scalar)> = (0..m)
                .filter(|&k| !act[(k, v)].is_zero())
                .map(|k| (n0 + k, act[(k, v)].clone()))
                .collect();
            if !result.is_empty() {
                let negated = result.iter().map(|(k, c)| (*k, -c.clone())).collect();
                brackets.push(((x, n0 + v), result));
                brackets.push(((n0 + v, x), negated));
            }
        }
    }
    Arc::new(
        LieSuperalgebra::new("abelian_on_module", names("X", n0), names("x", m), brackets).unwrap(),
    )
}

/// Central `g0`, odd brackets a random symmetric form with values in `g0`.
pub fn central_heisenberg(rng: &mut ChaCha8Rng, n0: usize, m: usize) -> Arc<LieSuperalgebra> {
    let mut brackets = Vec::new();
    for i in 0..m {
        for j in i..m {
            let result: Vec<(usize, Scalar)> = (0..n0)
                .map(|k| (k, int(rng.gen_range(-2..=2))))
                .filter(|(_, c)| !c.is_zero())
                .collect();
            if !result.is_empty() {
                brackets.push(((n0 + i, n0 + j), result.clone()));
                if i != j {
                    brackets.push(((n0 + j, n0 + i), result));
                }
            }
        }
    }
    Arc::new(
        LieSuperalgebra::new(
            "central_heisenberg",
            names("Z", n0),
            names("x", m),
            brackets,
        )
        .unwrap(),
    )
}

pub fn random_relabel(rng: &mut ChaCha8Rng, alg: &LieSuperalgebra) -> Arc<LieSuperalgebra> {
    let even = random_invertible(rng, alg.n_even());
    let odd = random_invertible(rng, alg.n_odd());
    Arc::new(alg.change_basis(&even, &odd).unwrap())
}
