//! Katsura and cyclic benchmark systems.
//!
//! Both families default to GF(32003) under grevlex, the setup the
//! benchmark table sizes refer to; the driver's flags can override either.

use std::fmt;
use std::str::FromStr;

use siggb::{OrderKind, TermOrder};

use crate::ideal_file::{normalize, IdealFile, IntPoly, TermMap};

pub const BENCH_CHAR: u32 = 32003;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BenchError {
    TooSmall(u32),
    BadSpec(String),
}

impl fmt::Display for BenchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BenchError::TooSmall(n) => write!(f, "benchmark size {n} is below the minimum of 2"),
            BenchError::BadSpec(s) => {
                write!(
                    f,
                    "bad benchmark spec '{s}' (expected katsura:N or cyclic:N)"
                )
            }
        }
    }
}

impl std::error::Error for BenchError {}

/// A `--bench` argument: `katsura:N` or `cyclic:N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchSpec {
    Katsura(u32),
    Cyclic(u32),
}

impl FromStr for BenchSpec {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, BenchError> {
        let (family, size) = s
            .split_once(':')
            .ok_or_else(|| BenchError::BadSpec(s.to_string()))?;
        let n: u32 = size
            .parse()
            .map_err(|_| BenchError::BadSpec(s.to_string()))?;
        match family {
            "katsura" => Ok(BenchSpec::Katsura(n)),
            "cyclic" => Ok(BenchSpec::Cyclic(n)),
            _ => Err(BenchError::BadSpec(s.to_string())),
        }
    }
}

impl BenchSpec {
    pub fn generate(&self) -> Result<IdealFile, BenchError> {
        match self {
            BenchSpec::Katsura(n) => gen_katsura(*n),
            BenchSpec::Cyclic(n) => gen_cyclic(*n),
        }
    }

    pub fn name(&self) -> String {
        match self {
            BenchSpec::Katsura(n) => format!("katsura:{n}"),
            BenchSpec::Cyclic(n) => format!("cyclic:{n}"),
        }
    }
}

fn add_term(map: &mut TermMap, exps: Vec<u16>, c: i128) {
    *map.entry(exps).or_insert(0) += c;
}

fn finish(map: TermMap, nvars: usize) -> IntPoly {
    normalize(map, &TermOrder::new(OrderKind::GrevLex, nvars))
}

/// Katsura system of size n: variables u_0..u_n, the n quadratic
/// convolution relations sum_{i=-n..n} u_|i| u_|m-i| - u_m for
/// m = 0..n-1, and the linear relation u_0 + 2(u_1 + .. + u_n) - 1.
pub fn gen_katsura(n: u32) -> Result<IdealFile, BenchError> {
    if n < 2 {
        return Err(BenchError::TooSmall(n));
    }
    let n = n as i64;
    let nv = (n + 1) as usize;
    let vars: Vec<String> = (0..nv).map(|i| format!("u{i}")).collect();
    let mut polys = Vec::with_capacity(nv);
    for m in 0..n {
        let mut map = TermMap::new();
        for i in -n..=n {
            let a = i.unsigned_abs() as usize;
            let b = (m - i).unsigned_abs() as usize;
            if b >= nv {
                continue;
            }
            let mut exps = vec![0u16; nv];
            exps[a] += 1;
            exps[b] += 1;
            add_term(&mut map, exps, 1);
        }
        let mut linear = vec![0u16; nv];
        linear[m as usize] = 1;
        add_term(&mut map, linear, -1);
        polys.push(finish(map, nv));
    }
    let mut map = TermMap::new();
    for i in 0..nv {
        let mut exps = vec![0u16; nv];
        exps[i] = 1;
        add_term(&mut map, exps, if i == 0 { 1 } else { 2 });
    }
    add_term(&mut map, vec![0u16; nv], -1);
    polys.push(finish(map, nv));
    Ok(IdealFile {
        vars,
        characteristic: BENCH_CHAR,
        order: OrderKind::GrevLex,
        polys,
    })
}

/// Cyclic-n roots system: variables x_1..x_n, the cyclic window sums of
/// widths 1..n-1, and the full product minus one.
pub fn gen_cyclic(n: u32) -> Result<IdealFile, BenchError> {
    if n < 2 {
        return Err(BenchError::TooSmall(n));
    }
    let nv = n as usize;
    let vars: Vec<String> = (1..=nv).map(|i| format!("x{i}")).collect();
    let mut polys = Vec::with_capacity(nv);
    for d in 1..nv {
        let mut map = TermMap::new();
        for i in 0..nv {
            let mut exps = vec![0u16; nv];
            for j in 0..d {
                exps[(i + j) % nv] += 1;
            }
            add_term(&mut map, exps, 1);
        }
        polys.push(finish(map, nv));
    }
    let mut map = TermMap::new();
    add_term(&mut map, vec![1u16; nv], 1);
    add_term(&mut map, vec![0u16; nv], -1);
    polys.push(finish(map, nv));
    Ok(IdealFile {
        vars,
        characteristic: BENCH_CHAR,
        order: OrderKind::GrevLex,
        polys,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn katsura_shape_matches_the_convention() {
        let f = gen_katsura(5).unwrap();
        assert_eq!(f.vars.len(), 6);
        assert_eq!(f.polys.len(), 6);
        let f = gen_katsura(2).unwrap();
        assert_eq!(f.vars.len(), 3);
        assert_eq!(f.polys.len(), 3);
        let mut degs: Vec<u32> = f
            .polys
            .iter()
            .map(|p| {
                p.iter()
                    .map(|(_, e)| e.iter().map(|&x| x as u32).sum())
                    .max()
                    .unwrap()
            })
            .collect();
        degs.sort();
        assert_eq!(degs, vec![1, 2, 2]);
        // the linear relation has n+1 variable terms plus the constant
        let linear = f.polys.last().unwrap();
        assert_eq!(linear.len(), 3 + 1);
        assert_eq!(gen_katsura(1).unwrap_err(), BenchError::TooSmall(1));
    }

    #[test]
    fn katsura2_matches_hand_expansion() {
        // m=0: u0^2 + 2u1^2 + 2u2^2 - u0
        // m=1: 2u0u1 + 2u1u2 - u1
        // linear: u0 + 2u1 + 2u2 - 1
        let f = gen_katsura(2).unwrap();
        assert_eq!(
            f.polys[0],
            vec![
                (1, vec![2, 0, 0]),
                (2, vec![0, 2, 0]),
                (2, vec![0, 0, 2]),
                (-1, vec![1, 0, 0]),
            ]
        );
        assert_eq!(
            f.polys[1],
            vec![(2, vec![1, 1, 0]), (2, vec![0, 1, 1]), (-1, vec![0, 1, 0]),]
        );
        assert_eq!(
            f.polys[2],
            vec![
                (1, vec![1, 0, 0]),
                (2, vec![0, 1, 0]),
                (2, vec![0, 0, 1]),
                (-1, vec![0, 0, 0]),
            ]
        );
    }

    #[test]
    fn cyclic3_matches_the_textbook_form() {
        let f = gen_cyclic(3).unwrap();
        assert_eq!(f.vars, vec!["x1", "x2", "x3"]);
        assert_eq!(
            f.polys[0],
            vec![(1, vec![1, 0, 0]), (1, vec![0, 1, 0]), (1, vec![0, 0, 1])]
        );
        assert_eq!(
            f.polys[1],
            vec![(1, vec![1, 1, 0]), (1, vec![1, 0, 1]), (1, vec![0, 1, 1])]
        );
        assert_eq!(f.polys[2], vec![(1, vec![1, 1, 1]), (-1, vec![0, 0, 0])]);
    }

    #[test]
    fn cyclic_degrees_run_one_to_n() {
        let f = gen_cyclic(5).unwrap();
        assert_eq!(f.polys.len(), 5);
        let degs: Vec<u32> = f
            .polys
            .iter()
            .map(|p| {
                p.iter()
                    .map(|(_, e)| e.iter().map(|&x| x as u32).sum())
                    .max()
                    .unwrap()
            })
            .collect();
        assert_eq!(degs, vec![1, 2, 3, 4, 5]);
        assert_eq!(gen_cyclic(0).unwrap_err(), BenchError::TooSmall(0));
    }

    #[test]
    fn bench_specs_parse_and_generate() {
        assert_eq!("katsura:5".parse(), Ok(BenchSpec::Katsura(5)));
        assert_eq!("cyclic:6".parse(), Ok(BenchSpec::Cyclic(6)));
        assert!("katsura5".parse::<BenchSpec>().is_err());
        assert!("cube:3".parse::<BenchSpec>().is_err());
        let f = BenchSpec::Katsura(3).generate().unwrap();
        assert_eq!(f.characteristic, BENCH_CHAR);
        // generated files round-trip through the text format
        let again = IdealFile::parse(&f.render()).unwrap();
        assert_eq!(f, again);
    }
}
