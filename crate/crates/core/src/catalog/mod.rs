//! Built-in groups, the group-file format, and subgroup specifiers.

pub mod field;
pub mod format;

use std::sync::Arc;

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Permutation;
use crate::structure::{hall_subgroups, sylow_subgroup, PrimeSet};
use crate::subgroup::Subgroup;

pub use field::{FieldElement, GaloisField};
pub use format::{
    parse_group_file, parse_group_spec, parse_permutation, parse_permutations, print_group_file,
    GroupSpecFile,
};

const MAX_N: usize = 12;
const MAX_CYCLIC: usize = 30;

fn out_of_range(what: &'static str, n: usize) -> Error {
    Error::Unsupported {
        what,
        value: n.to_string(),
    }
}

fn cycle(degree: usize, points: impl IntoIterator<Item = usize>) -> Permutation {
    let c: Vec<usize> = points.into_iter().collect();
    Permutation::from_cycles(degree, &[c]).expect("valid cycle")
}

fn build(degree: usize, gens: Vec<Permutation>) -> PermGroup {
    let gens = gens.into_iter().filter(|g| !g.is_identity()).collect();
    PermGroup::new(degree, gens).expect("catalog generators are valid")
}

/// `S_n` on `n` points, generated by `(1 2)` and `(1 2 … n)`.
pub fn symmetric(n: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_N {
        return Err(out_of_range("symmetric degree", n));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    Ok(build(n, vec![cycle(n, [1, 2]), cycle(n, 1..=n)]))
}

/// `A_n` on `n` points, generated by `(1 2 3)` and an `(n-1)`- or `n`-cycle
/// of even parity.
pub fn alternating(n: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_N {
        return Err(out_of_range("alternating degree", n));
    }
    if n < 3 {
        return Ok(PermGroup::trivial(n));
    }
    let long = if n % 2 == 1 {
        cycle(n, 1..=n)
    } else {
        cycle(n, 2..=n)
    };
    Ok(build(n, vec![cycle(n, [1, 2, 3]), long]))
}

/// `C_n` generated by an `n`-cycle.
pub fn cyclic(n: usize) -> Result<PermGroup> {
    if n == 0 || n > MAX_CYCLIC {
        return Err(out_of_range("cyclic order", n));
    }
    if n == 1 {
        return Ok(PermGroup::trivial(1));
    }
    Ok(build(n, vec![cycle(n, 1..=n)]))
}

/// The dihedral group of order `2n` acting on the `n`-gon.
pub fn dihedral(n: usize) -> Result<PermGroup> {
    if !(3..=MAX_N).contains(&n) {
        return Err(out_of_range("dihedral degree", n));
    }
    let images: Vec<usize> = (1..=n).map(|i| n + 1 - i).collect();
    let reflection = Permutation::from_images(&images).expect("reflection");
    Ok(build(n, vec![cycle(n, 1..=n), reflection]))
}

/// `PSL(2, q)` on the `q + 1` points of the projective line. Field element
/// with encoding `v` is point `v + 1`; `∞` is point `q + 1`.
pub fn psl2(q: u32) -> Result<PermGroup> {
    if ![4, 5, 7, 8, 9, 11].contains(&q) {
        return Err(out_of_range("PSL(2, q) field order", q as usize));
    }
    let f = GaloisField::new(q)?;
    let degree = q as usize + 1;
    let inf = q as usize;
    let point = |x: FieldElement| x.0 as usize;
    let from_map = |map: &dyn Fn(Option<FieldElement>) -> Option<FieldElement>| {
        let mut images = vec![0u32; degree];
        for v in 0..=q {
            let x = (v < q).then_some(FieldElement(v));
            let y = map(x).map_or(inf, point);
            images[v as usize] = y as u32;
        }
        Permutation::from_zero_based(images).expect("projective map is a bijection")
    };
    let mut gens = Vec::new();
    for b in f.additive_basis() {
        gens.push(from_map(&|x| x.map(|x| f.add(x, b))));
    }
    let omega = f.primitive_element();
    let g = if f.characteristic() == 2 {
        omega
    } else {
        f.mul(omega, omega)
    };
    gens.push(from_map(&|x| x.map(|x| f.mul(g, x))));
    gens.push(from_map(&|x| match x {
        None => Some(f.zero()),
        Some(x) if x == f.zero() => None,
        Some(x) => Some(f.neg(f.inv(x).unwrap())),
    }));
    let group = build(degree, gens);
    let q64 = q as u64;
    let expected = q64 * (q64 * q64 - 1) / num_integer::gcd(2, q64 - 1);
    debug_assert_eq!(group.order(), expected);
    Ok(group)
}

/// Upper unitriangular 3×3 matrices over `GF(p)`, acting regularly on
/// themselves by right multiplication. Triple `(a, b, c)` is point
/// `1 + a + p·b + p²·c`.
pub fn heisenberg(p: u32) -> Result<PermGroup> {
    if ![3, 5, 7].contains(&p) {
        return Err(out_of_range("Heisenberg prime", p as usize));
    }
    let n = (p * p * p) as usize;
    let encode = |(a, b, c): (u32, u32, u32)| a + p * b + p * p * c;
    let decode = |v: u32| (v % p, (v / p) % p, v / (p * p));
    let right_mul = |(a2, b2, c2): (u32, u32, u32)| {
        let images = (0..n as u32)
            .map(|v| {
                let (a, b, c) = decode(v);
                encode(((a + a2) % p, (b + b2) % p, (c + c2 + a * b2) % p))
            })
            .collect();
        Permutation::from_zero_based(images).expect("regular action")
    };
    Ok(build(n, vec![right_mul((1, 0, 0)), right_mul((0, 1, 0))]))
}

/// `SL(2, 3)` acting on the 8 non-zero row vectors of `GF(3)²` by `v ↦ vM`.
pub fn sl2_3() -> PermGroup {
    let vectors: Vec<(u32, u32)> = (0..9)
        .map(|v| (v % 3, v / 3))
        .filter(|&v| v != (0, 0))
        .collect();
    let act = |m: [[u32; 2]; 2]| {
        let images = vectors
            .iter()
            .map(|&(x, y)| {
                let img = (
                    (x * m[0][0] + y * m[1][0]) % 3,
                    (x * m[0][1] + y * m[1][1]) % 3,
                );
                vectors.iter().position(|&w| w == img).unwrap() as u32
            })
            .collect();
        Permutation::from_zero_based(images).expect("invertible matrix")
    };
    build(8, vec![act([[1, 1], [0, 1]]), act([[1, 0], [1, 1]])])
}

/// Every catalog name, in catalog order.
pub fn names() -> Vec<String> {
    let mut out = Vec::new();
    out.extend((2..=7).map(|n| format!("S{n}")));
    out.extend((3..=7).map(|n| format!("A{n}")));
    out.extend((1..=30).map(|n| format!("C{n}")));
    out.extend((3..=12).map(|n| format!("D{n}")));
    out.extend([4, 5, 7, 8, 9, 11].map(|q| format!("L2({q})")));
    out.extend(["SL(2,3)", "H27", "H125"].map(String::from));
    out
}

fn unknown(name: &str) -> Error {
    Error::UnknownGroup {
        name: name.to_string(),
        known: names(),
    }
}

/// Builds a catalog group by name.
pub fn by_name(name: &str) -> Result<PermGroup> {
    if !names().iter().any(|n| n == name) {
        return Err(unknown(name));
    }
    let num = |s: &str| s.parse::<usize>().expect("listed names are well formed");
    match name {
        "SL(2,3)" => Ok(sl2_3()),
        "H27" => heisenberg(3),
        "H125" => heisenberg(5),
        _ if name.starts_with("L2(") => psl2(num(&name[3..name.len() - 1]) as u32),
        _ => {
            let n = num(&name[1..]);
            match &name[..1] {
                "S" => symmetric(n),
                "A" => alternating(n),
                "C" => cyclic(n),
                "D" => dihedral(n),
                _ => unreachable!(),
            }
        }
    }
}

/// A catalog name or the path of a group file. Returns a display name and
/// the group.
pub fn resolve(spec: &str) -> Result<(String, PermGroup)> {
    if let Ok(g) = by_name(spec) {
        return Ok((spec.to_string(), g));
    }
    let path = std::path::Path::new(spec);
    if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(e.to_string()))?;
        let file = parse_group_spec(&text)?;
        let name = file.name.clone().unwrap_or_else(|| spec.to_string());
        return Ok((name, file.to_group()?));
    }
    Err(unknown(spec))
}

fn bad(spec: &str, reason: impl Into<String>) -> Error {
    Error::BadSpecifier {
        spec: spec.to_string(),
        reason: reason.into(),
    }
}

fn parse_prime(spec: &str, text: &str) -> Result<u64> {
    let p: u64 = text
        .trim()
        .parse()
        .map_err(|_| bad(spec, format!("{:?} is not a number", text.trim())))?;
    if !crate::structure::primes::is_prime(p) {
        return Err(bad(spec, format!("{p} is not a prime")));
    }
    Ok(p)
}

/// Resolves a subgroup specifier inside `g`:
///
/// - `sylow:p`: a Sylow `p`-subgroup (trivial when `p ∤ |G|`);
/// - `hall:p1,p2,...`: the first Hall subgroup for those primes;
/// - `gens:<perms>`: generated by comma-separated permutations;
/// - `cyclic:<perm>`: generated by one permutation.
pub fn resolve_subgroup(g: &Subgroup, spec: &str) -> Result<Subgroup> {
    let amb: &Arc<Ambient> = g.ambient();
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad(spec, "expected sylow:, hall:, gens: or cyclic:"))?;
    let inside = |h: Subgroup| -> Result<Subgroup> {
        if h.is_subgroup_of(g) {
            Ok(h)
        } else {
            Err(bad(spec, "not contained in the group"))
        }
    };
    let degree = amb.degree();
    let perms = |text: &str| -> Result<Vec<Permutation>> {
        format::parse_permutations(degree, text).map_err(|e| bad(spec, e.to_string()))
    };
    match kind {
        "sylow" => sylow_subgroup(g, parse_prime(spec, rest)?),
        "hall" => {
            let primes = rest
                .split(',')
                .map(|p| parse_prime(spec, p))
                .collect::<Result<Vec<_>>>()?;
            let pi = PrimeSet::new(primes)?;
            hall_subgroups(g, &pi)?
                .into_iter()
                .next()
                .ok_or_else(|| bad(spec, format!("no Hall {pi}-subgroup")))
        }
        "gens" => {
            let gens = perms(rest)?;
            let h = Subgroup::generated(amb, &gens)
                .map_err(|_| bad(spec, "not contained in the group"))?;
            inside(h)
        }
        "cyclic" => {
            let p =
                format::parse_permutation(degree, rest).map_err(|e| bad(spec, e.to_string()))?;
            let h = Subgroup::generated(amb, &[p])
                .map_err(|_| bad(spec, "not contained in the group"))?;
            inside(h)
        }
        _ => Err(bad(spec, format!("unknown kind {kind:?}"))),
    }
}
