//! Verification suites and the command implementations behind `jinv`.

use std::time::Instant;

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::comp::{CompAlgebra, CompElem};
use crate::config::Config;
use crate::dim::{self, Family, Group};
use crate::error::{Error, Result};
use crate::exact::{random_int_scalar, random_scalar, seeded_rng, Dual, GaussRational, Scalar, SeedRng};
use crate::inv::{alt5, alt5_naive, chi, f11_tilde, gens_p2, gens_p3, jacobian_rank, p2_dual, p3_dual, p_invariant};
use crate::jordan::HermMat;
use crate::lie::{det_annihilator_dim, invariance_against_basis, lie_basis, random_tuple, Verdict};
use crate::models::{gl3_mix, quat_matrix, split_iso, GroupElem, Mat3, Model};
use crate::realize::{self, RealizationResult};
use crate::report::{CheckRecord, CheckReport};

type G = GaussRational;
type H = HermMat<G>;
type SuiteFn = fn(&Config) -> Vec<CheckRecord>;

/// Suites in report order.
pub const SUITES: [(&str, SuiteFn); 10] = [
    ("comp", suite_comp),
    ("jordan", suite_jordan),
    ("peirce", suite_peirce),
    ("lie-dim", suite_lie_dim),
    ("invariance", suite_invariance),
    ("jacobian", suite_jacobian),
    ("finite-action", suite_finite_action),
    ("p-invariant", suite_p_invariant),
    ("alt5", suite_alt5),
    ("f11-tilde", suite_f11_tilde),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|(n, _)| *n).collect()
}

/// Expected Lie-algebra dimensions for `V0..V3`.
pub fn expected_lie_dim(alg: CompAlgebra) -> usize {
    match alg {
        CompAlgebra::R => 8,
        CompAlgebra::C => 16,
        CompAlgebra::H => 35,
        CompAlgebra::O => 78,
    }
}

/// Expected rank of the Jacobian of the `p`-copy generators.
pub fn expected_jacobian_rank(alg: CompAlgebra, copies: usize) -> usize {
    match (copies, alg) {
        (2, _) => 4,
        (_, CompAlgebra::R) => 10,
        _ => 11,
    }
}

fn millis(start: Instant) -> u64 {
    start.elapsed().as_millis() as u64
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, millis(start))
}

/// Runs `check` at `points` random inputs drawn from one seeded stream;
/// `check` returns the inputs of a failure.
fn point_check(
    suite: &str,
    name: &str,
    alg: Option<CompAlgebra>,
    points: usize,
    seed: u64,
    mut check: impl FnMut(&mut SeedRng) -> Option<Value>,
) -> CheckRecord {
    let start = Instant::now();
    let mut rng = seeded_rng(seed);
    let mut held = 0;
    let mut witness = None;
    for k in 0..points {
        match check(&mut rng) {
            None => held += 1,
            Some(inputs) => {
                witness.get_or_insert_with(|| json!({"seed": seed, "point": k, "inputs": inputs}));
            }
        }
    }
    CheckRecord::compare(
        suite,
        name,
        alg,
        json!({ "holds_at": points }),
        json!({ "holds_at": held }),
    )
    .with_witness(witness)
    .with_millis(millis(start))
}

fn random_elem(alg: CompAlgebra, rng: &mut SeedRng, height: u64) -> CompElem<G> {
    CompElem::from_coeffs(alg, (0..alg.dim()).map(|_| random_scalar(rng, height)).collect())
}

fn random_point(alg: CompAlgebra, rng: &mut SeedRng, height: u64) -> H {
    random_tuple(alg, 1, rng, height).remove(0)
}

fn suite_comp(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for alg in cfg.algebras() {
        let h = cfg.height;
        out.push(point_check(
            "comp",
            "composition-law",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let (u, v) = (random_elem(alg, rng, h), random_elem(alg, rng, h));
                (u.mul(&v).cnorm() != &u.cnorm() * &v.cnorm()).then(|| json!([u, v]))
            },
        ));
        out.push(point_check(
            "comp",
            "alternativity",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let (u, v) = (random_elem(alg, rng, h), random_elem(alg, rng, h));
                let left = u.mul(&u).mul(&v) == u.mul(&u.mul(&v));
                let right = v.mul(&u).mul(&u) == v.mul(&u.mul(&u));
                (!(left && right)).then(|| json!([u, v]))
            },
        ));
    }
    out
}

fn suite_jordan(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for alg in cfg.algebras() {
        let h = cfg.height;
        out.push(point_check(
            "jordan",
            "cayley-hamilton",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let x = random_point(alg, rng, h);
                (x.jmul(&x.sharp()) != H::identity(alg).scale(&x.det())).then(|| json!([x]))
            },
        ));
        out.push(point_check(
            "jordan",
            "trilinear-diagonal",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let x = random_point(alg, rng, h);
                (x.trilinear_f(&x, &x) != &G::from_int(6) * &x.det()).then(|| json!([x]))
            },
        ));
        out.push(point_check(
            "jordan",
            "jordan-identity",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let (x, y) = (random_point(alg, rng, h), random_point(alg, rng, h));
                let x2 = x.jmul(&x);
                (x.jmul(&y).jmul(&x2) != x.jmul(&y.jmul(&x2))).then(|| json!([x, y]))
            },
        ));
        out.push(point_check(
            "jordan",
            "sharp-of-sharp",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let x = random_point(alg, rng, h);
                (x.sharp().sharp() != x.scale(&x.det())).then(|| json!([x]))
            },
        ));
    }
    out
}

fn suite_peirce(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for alg in cfg.algebras() {
        let h = cfg.height;
        out.push(point_check(
            "peirce",
            "sharp-diagonal",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let x = random_point(alg, rng, h);
                (x.sharp().diag != x.peirce().sharp_diag()).then(|| json!([x]))
            },
        ));
        out.push(point_check(
            "peirce",
            "det-expansion",
            Some(alg),
            cfg.points,
            cfg.seed,
            |rng| {
                let x = random_point(alg, rng, h);
                let parts = x.peirce();
                (parts.det() != x.det() || parts.assemble() != x).then(|| json!([x]))
            },
        ));
    }
    out
}

fn suite_lie_dim(cfg: &Config) -> Vec<CheckRecord> {
    cfg.algebras()
        .into_iter()
        .map(|alg| {
            let e = expected_lie_dim(alg);
            let ((basis, ann), ms) = timed(|| (lie_basis(alg).dim(), det_annihilator_dim(alg)));
            CheckRecord::compare(
                "lie-dim",
                "lie-dimension",
                Some(alg),
                json!({ "lie_basis": e, "det_annihilator": e }),
                json!({ "lie_basis": basis, "det_annihilator": ann }),
            )
            .with_millis(ms)
        })
        .collect()
}

fn verdict_record(
    suite: &str,
    name: &str,
    alg: CompAlgebra,
    cfg: &Config,
    verdicts: &[Verdict],
    labels: &[String],
) -> CheckRecord {
    let passed = verdicts.iter().filter(|v| v.passed).count();
    let witness = verdicts.iter().enumerate().find_map(|(k, v)| {
        v.witness.as_ref().map(|(tuple, idx)| {
            json!({ "seed": cfg.seed.wrapping_add(k as u64), "operator": labels[k], "inputs": tuple, "output": idx })
        })
    });
    CheckRecord::compare(
        suite,
        name,
        Some(alg),
        json!({ "annihilated_by": verdicts.len(), "points": cfg.points }),
        json!({ "annihilated_by": passed, "points": cfg.points }),
    )
    .with_witness(witness)
}

fn suite_invariance(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for alg in cfg.algebras() {
        let basis = lie_basis(alg);
        let labels: Vec<String> = basis.ops.iter().map(|t| t.label()).collect();
        if cfg.wants_copies(3) {
            let (v, ms) = timed(|| invariance_against_basis(&p3_dual, 3, &basis, cfg.points, cfg.seed, cfg.height));
            out.push(verdict_record("invariance", "f1..f11", alg, cfg, &v, &labels).with_millis(ms));
        }
        if cfg.wants_copies(2) {
            let (v, ms) = timed(|| invariance_against_basis(&p2_dual, 2, &basis, cfg.points, cfg.seed, cfg.height));
            out.push(verdict_record("invariance", "p2-generators", alg, cfg, &v, &labels).with_millis(ms));
        }
    }
    out
}

fn suite_jacobian(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    for p in [2, 3].into_iter().filter(|&p| cfg.wants_copies(p)) {
        for alg in cfg.algebras() {
            let e = expected_jacobian_rank(alg, p);
            let seeds: Vec<u64> = (0..3).map(|k| cfg.seed.wrapping_add(k)).collect();
            let (ranks, ms) = timed(|| {
                seeds
                    .iter()
                    .map(|&s| jacobian_rank(alg, p, s, cfg.height))
                    .collect::<Vec<_>>()
            });
            let mut rec = CheckRecord::compare(
                "jacobian",
                &format!("rank-p{p}"),
                Some(alg),
                json!([e, e, e]),
                json!(ranks),
            );
            if rec.status == crate::report::Status::Fail {
                rec = rec.with_witness(Some(json!({ "seeds": seeds, "height": cfg.height })));
            }
            out.push(rec.with_millis(ms));
        }
    }
    out
}

fn models(cfg: &Config) -> Vec<Model> {
    [Model::V0, Model::V1, Model::V2]
        .into_iter()
        .filter(|m| cfg.algebras().contains(&m.algebra()))
        .collect()
}

fn suite_finite_action(cfg: &Config) -> Vec<CheckRecord> {
    models(cfg)
        .into_iter()
        .map(|model| {
            let alg = model.algebra();
            point_check("finite-action", "inner-words", Some(alg), cfg.points, cfg.seed, |rng| {
                let t = random_tuple(alg, 3, rng, cfg.height);
                let w = GroupElem::random(model, rng, 3, 5);
                let moved = w.act_tuple(&t).expect("word matches model");
                let same3 = gens_p3(&moved[0], &moved[1], &moved[2]) == gens_p3(&t[0], &t[1], &t[2]);
                let same2 = gens_p2(&moved[0], &moved[1]) == gens_p2(&t[0], &t[1]);
                (!(same2 && same3)).then(|| json!({ "tuple": t, "word": w.word }))
            })
        })
        .collect()
}

fn p_dual(xs: &[HermMat<Dual<G>>]) -> Vec<Dual<G>> {
    let m: Vec<Mat3<Dual<G>>> = xs.iter().map(|x| split_iso(x).expect("V1 point")).collect();
    vec![p_invariant(&m[0], &m[1], &m[2])]
}

fn random_mat3(rng: &mut SeedRng, height: u64) -> Mat3<G> {
    Mat3::from_fn(|_, _| random_scalar(rng, height))
}

fn suite_p_invariant(cfg: &Config) -> Vec<CheckRecord> {
    let alg = CompAlgebra::C;
    if !cfg.algebras().contains(&alg) {
        return Vec::new();
    }
    let (h, n, seed) = (cfg.height, cfg.points, cfg.seed);
    let basis = lie_basis(alg);
    let labels: Vec<String> = basis.ops.iter().map(|t| t.label()).collect();
    let (v, ms) = timed(|| invariance_against_basis(&p_dual, 3, &basis, n, seed, h));
    let mut out = vec![verdict_record("p-invariant", "infinitesimal", alg, cfg, &v, &labels).with_millis(ms)];
    out.push(point_check("p-invariant", "inner-finite", Some(alg), n, seed, |rng| {
        let m: Vec<Mat3<G>> = (0..3).map(|_| random_mat3(rng, h)).collect();
        let w = GroupElem::random(Model::V1, rng, 3, 5);
        let a: Vec<Mat3<G>> = m.iter().map(|x| w.act_mat(x).expect("V1 word")).collect();
        (p_invariant(&a[0], &a[1], &a[2]) != p_invariant(&m[0], &m[1], &m[2])).then(|| json!({ "word": w.word }))
    }));
    out.push(point_check(
        "p-invariant",
        "difference-formula",
        Some(alg),
        n,
        seed,
        |rng| {
            let (a1, a2) = (random_scalar(rng, h), random_scalar(rng, h));
            let e = Mat3::<G>::identity();
            let y = Mat3::diagonal([a1.clone(), a2.clone(), G::zero()]);
            let z = random_mat3(rng, h);
            let lhs = &p_invariant(&e, &y, &z) - &p_invariant(&z, &y, &e);
            let zz = |i: usize, j: usize| z.at(i, j).clone();
            let cyc = &(&(&zz(1, 3) * &zz(3, 2)) * &zz(2, 1)) - &(&(&zz(3, 1) * &zz(1, 2)) * &zz(2, 3));
            let rhs = &(&(&a1 * &a2) * &(&a1 - &a2)) * &cyc;
            (lhs != rhs).then(|| json!({ "a1": a1, "a2": a2 }))
        },
    ));
    out.push(point_check(
        "p-invariant",
        "transpose-reverses",
        Some(alg),
        n,
        seed,
        |rng| {
            let m: Vec<Mat3<G>> = (0..3).map(|_| random_mat3(rng, h)).collect();
            let t: Vec<Mat3<G>> = m.iter().map(Mat3::transpose).collect();
            (p_invariant(&t[0], &t[1], &t[2]) != p_invariant(&m[2], &m[1], &m[0])).then_some(Value::Null)
        },
    ));
    let mut rng = seeded_rng(seed);
    let m: Vec<Mat3<G>> = (0..3).map(|_| random_mat3(&mut rng, h)).collect();
    let t: Vec<Mat3<G>> = m.iter().map(Mat3::transpose).collect();
    let changed = p_invariant(&t[0], &t[1], &t[2]) != p_invariant(&m[0], &m[1], &m[2]);
    out.push(CheckRecord::compare(
        "p-invariant",
        "outer-changes-p",
        Some(alg),
        json!(true),
        json!(changed),
    ));
    out
}

fn alt5_checks<E: crate::models::MatEntry>(
    alg: CompAlgebra,
    cfg: &Config,
    to_mat: impl Fn(&H) -> Mat3<E>,
) -> Vec<CheckRecord>
where
    E::Base: PartialEq,
{
    let h = cfg.height;
    // integer coordinates keep the 5-fold products small
    let draw = |rng: &mut SeedRng| -> [Mat3<E>; 5] {
        std::array::from_fn(|_| {
            let c: Vec<G> = (0..crate::jordan::coord_dim(alg))
                .map(|_| random_int_scalar(rng, h))
                .collect();
            to_mat(&H::from_coords(alg, &c))
        })
    };
    let mut out = Vec::new();
    out.push(point_check(
        "alt5",
        "alternating",
        Some(alg),
        cfg.points,
        cfg.seed,
        |rng| {
            let xs = draw(rng);
            let v = alt5(&xs);
            let mut swapped = xs.clone();
            swapped.swap(1, 3);
            let mut repeated = xs.clone();
            repeated[4] = repeated[0].clone();
            let ok = alt5(&swapped) == v.negated() && alt5(&repeated).is_zero();
            (!ok).then_some(Value::Null)
        },
    ));
    out.push(point_check(
        "alt5",
        "matches-120-term-sum",
        Some(alg),
        cfg.points,
        cfg.seed,
        |rng| {
            let xs = draw(rng);
            (alt5(&xs) != alt5_naive(&xs)).then_some(Value::Null)
        },
    ));
    out.push(point_check("alt5", "nonzero-generic", Some(alg), 1, cfg.seed, |rng| {
        alt5(&draw(rng)).is_zero().then_some(Value::Null)
    }));
    out
}

fn suite_alt5(cfg: &Config) -> Vec<CheckRecord> {
    let mut out = Vec::new();
    if cfg.algebras().contains(&CompAlgebra::C) {
        out.extend(alt5_checks(CompAlgebra::C, cfg, |x| split_iso(x).expect("V1 point")));
    }
    if cfg.algebras().contains(&CompAlgebra::H) {
        out.extend(alt5_checks(CompAlgebra::H, cfg, quat_matrix));
    }
    out
}

fn suite_f11_tilde(cfg: &Config) -> Vec<CheckRecord> {
    cfg.algebras()
        .into_iter()
        .map(|alg| {
            point_check("f11-tilde", "det-squared-law", Some(alg), cfg.points, cfg.seed, |rng| {
                let t = random_tuple(alg, 3, rng, cfg.height);
                let g = loop {
                    let g = random_mat3(rng, cfg.height);
                    if !g.det().is_zero() {
                        break g;
                    }
                };
                let tt = [t[0].clone(), t[1].clone(), t[2].clone()];
                let out = gl3_mix(&g, &tt).expect("g is invertible");
                let d = g.det();
                let ok = f11_tilde(&out[0], &out[1], &out[2]) == &(&d * &d) * &f11_tilde(&t[0], &t[1], &t[2]);
                (!ok).then(|| json!({ "tuple": t }))
            })
        })
        .collect()
}

/// Runs the configured suites (all when none are named). Suites run in
/// parallel; records keep declaration order.
pub fn cmd_verify(cfg: &Config) -> Result<CheckReport> {
    let selected: Vec<(&str, SuiteFn)> = if cfg.suites.is_empty() {
        SUITES.to_vec()
    } else {
        cfg.suites
            .iter()
            .map(|name| {
                SUITES
                    .iter()
                    .find(|(n, _)| n == name)
                    .copied()
                    .ok_or_else(|| Error::UnknownSuite(name.clone()))
            })
            .collect::<Result<_>>()?
    };
    let records: Vec<CheckRecord> = selected.par_iter().map(|(_, f)| f(cfg)).collect::<Vec<_>>().concat();
    let names: Vec<&str> = selected.iter().map(|(n, _)| *n).collect();
    Ok(CheckReport::new(&names.join(","), cfg, records))
}

/// Known invariant-space dimensions.
pub fn expected_dimension(alg: CompAlgebra, copies: usize, degree: usize, group: Group) -> Option<usize> {
    match (alg, copies, degree, group) {
        (CompAlgebra::R, 1, 3, _) => Some(1),
        (CompAlgebra::R, 2, 3, _) => Some(4),
        (CompAlgebra::R, 3, 3, _) => Some(10),
        (CompAlgebra::C, 3, 3, Group::Go) => Some(10),
        _ => None,
    }
}

/// Dimension of degree-`d` invariants of `pV`; an over-cap space is a skip.
pub fn cmd_dims(cfg: &Config, alg: CompAlgebra, copies: usize, degree: usize, group: Group) -> CheckReport {
    let expected = expected_dimension(alg, copies, degree, group).map_or(Value::Null, |e| json!(e));
    let name = format!("invariant-dimension p={copies} d={degree} {group:?}");
    let (res, ms) = timed(|| dim::invariant_dimension(alg, copies, degree, group, cfg.monomial_cap));
    let rec = match res {
        Ok(d) if expected.is_null() => {
            let mut r = CheckRecord::compare("dims", &name, Some(alg), json!(d), json!(d));
            r.expected = Value::Null;
            r
        }
        Ok(d) => CheckRecord::compare("dims", &name, Some(alg), expected, json!(d)),
        Err(e) => CheckRecord::skip("dims", &name, Some(alg), expected, e.to_string()),
    };
    CheckReport::new("dims", cfg, vec![rec.with_millis(ms)])
}

/// Expected rank of degree-`d` generator products where the generators
/// are known to be algebraically independent or the count is known.
pub fn expected_product_rank(alg: CompAlgebra, copies: usize, degree: usize) -> Option<usize> {
    let family = if copies == 2 { Family::P2 } else { Family::P3 };
    let count = dim::weighted_monomials(&family.degrees(), degree).len();
    match (copies, alg) {
        (2, _) => Some(count),
        // f1..f10 only stay independent of f11 up to degree 6 on 3V0
        (3, CompAlgebra::R) if degree <= 6 => Some(count),
        (3, CompAlgebra::R) => None,
        (3, _) => Some(count),
        _ => None,
    }
}

/// Minimum coordinate height for product-rank evaluation points.
pub const PRODUCT_RANK_MIN_HEIGHT: u64 = 10_000;

/// Rank of the degree-`d` products of generators at `points` random tuples,
/// for three consecutive seeds.
pub fn cmd_product_rank(
    cfg: &Config,
    alg: CompAlgebra,
    copies: usize,
    degree: usize,
    points: usize,
) -> Result<CheckReport> {
    let family = match copies {
        2 => Family::P2,
        3 => Family::P3,
        other => {
            return Err(Error::ModelMismatch(format!(
                "generators are defined for 2 or 3 copies, not {other}"
            )))
        }
    };
    let height = cfg.height.max(PRODUCT_RANK_MIN_HEIGHT);
    let seeds: Vec<u64> = (0..3).map(|k| cfg.seed.wrapping_add(k)).collect();
    let (ranks, ms) = timed(|| {
        seeds
            .par_iter()
            .map(|&s| dim::product_rank(family, alg, degree, points, s, height))
            .collect::<Vec<_>>()
    });
    let name = format!("product-rank p={copies} d={degree}");
    let rec = match expected_product_rank(alg, copies, degree) {
        Some(e) => CheckRecord::compare("product-rank", &name, Some(alg), json!([e, e, e]), json!(ranks)),
        None => {
            let agree = ranks.iter().all(|r| *r == ranks[0]);
            let mut r = CheckRecord::compare("product-rank", &name, Some(alg), json!(true), json!(agree));
            r.actual = json!(ranks);
            if !agree {
                r.status = crate::report::Status::Fail;
            }
            r
        }
    };
    let rec = rec.with_witness(Some(json!({ "seeds": seeds, "points": points, "height": height })));
    Ok(CheckReport::new("product-rank", cfg, vec![rec.with_millis(ms)]))
}

/// Reads a tuple: a JSON array of elements or `{"tuple": [...]}`.
pub fn parse_tuple(text: &str) -> Result<Vec<H>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let items = match v {
        Value::Array(items) => items,
        Value::Object(mut o) => match o.remove("tuple") {
            Some(Value::Array(items)) => items,
            _ => {
                return Err(Error::Schema(
                    "expected an array or an object with a \"tuple\" array".into(),
                ))
            }
        },
        _ => {
            return Err(Error::Schema(
                "expected an array or an object with a \"tuple\" array".into(),
            ))
        }
    };
    if items.is_empty() {
        return Err(Error::Schema("empty tuple".into()));
    }
    let tags: Vec<Option<&str>> = items.iter().map(|x| x.get("algebra").and_then(Value::as_str)).collect();
    if tags.iter().any(|t| t.is_none()) {
        return Err(Error::Schema("every element needs an \"algebra\" tag".into()));
    }
    let algs: Vec<CompAlgebra> = tags
        .iter()
        .map(|t| {
            t.unwrap()
                .parse::<CompAlgebra>()
                .map_err(|e| Error::Schema(e.to_string()))
        })
        .collect::<Result<_>>()?;
    if algs.iter().any(|a| *a != algs[0]) {
        return Err(Error::Schema(format!(
            "mixed algebra tags: {}",
            algs.iter().map(|a| a.jordan_name()).collect::<Vec<_>>().join(", ")
        )));
    }
    items
        .into_iter()
        .map(|x| serde_json::from_value(x).map_err(|e| Error::Schema(e.to_string())))
        .collect()
}

/// Named evaluation sets for `eval`.
pub const EVAL_SETS: [&str; 7] = ["det", "p2", "p3", "chi", "f11-tilde", "P", "alt5"];

fn need(set: &str, tuple: &[H], n: usize) -> Result<()> {
    if tuple.len() == n {
        Ok(())
    } else {
        Err(Error::Schema(format!(
            "set {set} takes {n} elements, got {}",
            tuple.len()
        )))
    }
}

/// Evaluates a named set at a tuple; values are exact strings.
pub fn cmd_eval(tuple: &[H], set: &str) -> Result<Value> {
    let alg = tuple
        .first()
        .ok_or_else(|| Error::Schema("empty tuple".into()))?
        .algebra();
    let named = |prefix: &str, vals: &[G]| -> Value {
        vals.iter()
            .enumerate()
            .map(|(k, v)| (format!("{prefix}{}", k + 1), json!(v.to_string())))
            .collect::<serde_json::Map<_, _>>()
            .into()
    };
    let values = match set {
        "det" => named("det", &tuple.iter().map(H::det).collect::<Vec<_>>()),
        "p2" => {
            need(set, tuple, 2)?;
            named("f", &gens_p2(&tuple[0], &tuple[1]))
        }
        "p3" => {
            need(set, tuple, 3)?;
            let mut v = named("f", &gens_p3(&tuple[0], &tuple[1], &tuple[2]));
            v["f11_tilde"] = json!(f11_tilde(&tuple[0], &tuple[1], &tuple[2]).to_string());
            v
        }
        "chi" => {
            if tuple.len() != 2 && tuple.len() != 3 {
                return Err(Error::Schema(format!(
                    "set chi takes 2 or 3 elements, got {}",
                    tuple.len()
                )));
            }
            let c = chi(tuple);
            let names: Vec<String> = if c.is_binary() {
                crate::inv::BINARY_MONOMIALS
                    .iter()
                    .map(|e| monomial_name(&[e[0], e[1]]))
                    .collect()
            } else {
                crate::inv::TERNARY_MONOMIALS.iter().map(|e| monomial_name(e)).collect()
            };
            names
                .into_iter()
                .zip(&c.coeffs)
                .map(|(n, v)| (n, json!(v.to_string())))
                .collect::<serde_json::Map<_, _>>()
                .into()
        }
        "f11-tilde" => {
            need(set, tuple, 3)?;
            json!({ "f11_tilde": f11_tilde(&tuple[0], &tuple[1], &tuple[2]).to_string() })
        }
        "P" => {
            need(set, tuple, 3)?;
            let m: Vec<Mat3<G>> = tuple
                .iter()
                .map(split_iso)
                .collect::<Result<_>>()
                .map_err(|_| Error::ModelMismatch(format!("P is defined on V1, got {}", alg.jordan_name())))?;
            json!({ "P": p_invariant(&m[0], &m[1], &m[2]).to_string() })
        }
        "alt5" => {
            need(set, tuple, 5)?;
            let v = match alg {
                CompAlgebra::C => {
                    let xs: [Mat3<G>; 5] = std::array::from_fn(|k| split_iso(&tuple[k]).expect("V1 point"));
                    alt5(&xs)
                }
                CompAlgebra::H => {
                    let xs: [Mat3<CompElem<G>>; 5] = std::array::from_fn(|k| quat_matrix(&tuple[k]));
                    alt5(&xs)
                }
                other => {
                    return Err(Error::ModelMismatch(format!(
                        "alt5 is defined on V1 and V2, got {}",
                        other.jordan_name()
                    )))
                }
            };
            json!({ "alt5": v.to_string() })
        }
        other => {
            return Err(Error::Parse(format!(
                "unknown set {other:?} (expected one of {})",
                EVAL_SETS.join(", ")
            )))
        }
    };
    Ok(json!({ "set": set, "algebra": alg, "values": values }))
}

fn monomial_name(exps: &[u32]) -> String {
    let vars = ["a", "b", "c"];
    let mut s = String::new();
    for (v, &e) in vars.iter().zip(exps) {
        match e {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{e}")),
        }
    }
    s
}

/// What `realize` should construct.
#[derive(Clone, Debug, PartialEq)]
pub enum RealizeRequest {
    /// `a³ + b³ + c³ + λabc` from the `V0` construction, embedded into `algebra`.
    Fermat { lambda: f64, algebra: CompAlgebra },
    /// `a³ + b³ + c³ + λabc` together with `f̃11 = μ` in `V1`.
    Mu { lambda: f64, mu: f64 },
    /// A binary cubic, coefficients of `a³, a²b, ab², b³`.
    Binary { coeffs: [f64; 4], algebra: CompAlgebra },
}

pub fn cmd_realize(req: &RealizeRequest, tolerance: f64) -> Result<RealizationResult> {
    match *req {
        RealizeRequest::Fermat { lambda, algebra } => {
            let mut res = realize::realize_fermat_v0(lambda, tolerance)?;
            if algebra != CompAlgebra::R {
                let tuple = res.herm_tuple()?;
                let embedded: Vec<_> = tuple.iter().map(|x| x.embed(algebra)).collect();
                res.residual = realize::residual(
                    &embedded,
                    &res.target
                        .iter()
                        .map(|&[a, b]| num_complex::Complex64::new(a, b))
                        .collect::<Vec<_>>(),
                    None,
                );
                res.tuple = embedded.iter().map(realize::ApproxHerm::from).collect();
            }
            Ok(res)
        }
        RealizeRequest::Mu { lambda, mu } => realize::realize_with_mu_v1(lambda, mu, tolerance),
        RealizeRequest::Binary { coeffs, algebra } => {
            realize::realize_binary_cubic(&coeffs.map(|c| num_complex::Complex64::new(c, 0.0)), algebra, tolerance)
        }
    }
}
