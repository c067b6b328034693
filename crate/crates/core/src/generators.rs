//! Seeded, deterministic construction of point sets with known or expected
//! Cayley-Bacharach structure: transverse complete intersections, collinear
//! families, rational normal curve samples, plane configurations, random
//! sets and perturbed negative controls.
//!
//! Determinism contract: identical parameters and seed produce the identical
//! point set, byte for byte after canonical serialization. Every retry loop
//! derives a fresh sub-seed from (seed, attempt index), so failures are
//! reproducible too.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::error::GenError;
use crate::field::{Fp, PrimeField, RationalField, Scalar};
use crate::forms::forms_coprime;
use crate::geometry::{HomogeneousForm, MonomialBasis, PointSet, ProjectivePoint};
use crate::linalg::Matrix;

/// Bounded retry budget shared by all acceptance-filtered generators.
pub const DEFAULT_ATTEMPT_BUDGET: usize = 200;

/// Where a generated set came from: enough to reproduce it exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub generator: String,
    pub params: Vec<(String, String)>,
    pub seed: u64,
    pub expected_cb_level: Option<usize>,
}

#[derive(Clone, Debug)]
pub struct Generated<K: Scalar> {
    pub points: PointSet<K>,
    pub provenance: Provenance,
}

/// Parameters of a generated rational normal curve, kept for oracle checks.
#[derive(Clone, Debug)]
pub struct RncParams<K: Scalar> {
    pub beta: Vec<K>,
}

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// Independent deterministic stream for (seed, salt); used per attempt and
/// per fuzz trial.
pub fn derive_seed(seed: u64, salt: u64) -> u64 {
    splitmix64(seed ^ splitmix64(salt.wrapping_add(0x51ed_270b)))
}

pub(crate) fn rng_for(seed: u64, salt: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(derive_seed(seed, salt))
}

/// Scalar types that can be sampled uniformly-ish from a seeded stream.
pub trait SampleScalar: Scalar {
    fn sample<R: Rng>(field: &Self::Field, rng: &mut R) -> Self;
}

impl SampleScalar for Fp {
    fn sample<R: Rng>(field: &PrimeField, rng: &mut R) -> Fp {
        field.element(rng.gen_range(0..field.modulus()) as i64)
    }
}

impl SampleScalar for crate::Rational {
    fn sample<R: Rng>(_: &RationalField, rng: &mut R) -> crate::Rational {
        // Small-height rationals keep exact arithmetic cheap.
        let numer = rng.gen_range(-24i64..=24);
        let denom = rng.gen_range(1i64..=8);
        crate::Rational::new(numer.into(), denom.into())
    }
}

fn sample_point<K: SampleScalar, R: Rng>(
    field: &K::Field,
    ambient_dim: usize,
    rng: &mut R,
) -> ProjectivePoint<K> {
    loop {
        let coords: Vec<K> = (0..=ambient_dim).map(|_| K::sample(field, rng)).collect();
        if coords.iter().any(|c| !c.is_zero()) {
            return ProjectivePoint::new(coords).expect("nonzero coordinate vector");
        }
    }
}

fn sample_form<K: SampleScalar, R: Rng>(
    field: &K::Field,
    ambient_dim: usize,
    degree: usize,
    rng: &mut R,
) -> HomogeneousForm<K> {
    let basis = MonomialBasis::new(ambient_dim, degree);
    loop {
        let coeffs: Vec<K> = (0..basis.len()).map(|_| K::sample(field, rng)).collect();
        if coeffs.iter().any(|c| !c.is_zero()) {
            return HomogeneousForm::new(basis, coeffs);
        }
    }
}

/// Product of `degree` random hyperplanes. Over a small prime field the
/// intersection points of two such split forms are all rational, which is
/// what makes complete-intersection draws accepted at a useful rate; a
/// generic irreducible form almost never has a fully rational intersection
/// locus over F_p.
fn sample_split_form<K: SampleScalar, R: Rng>(
    field: &K::Field,
    ambient_dim: usize,
    degree: usize,
    rng: &mut R,
) -> HomogeneousForm<K> {
    let mut acc = sample_form(field, ambient_dim, 1, rng);
    for _ in 1..degree {
        let next = sample_form(field, ambient_dim, 1, rng);
        acc = crate::forms::multiply_forms(&acc, &next);
    }
    acc
}

/// Canonical representatives of all points of P^n(F_p), in a fixed
/// enumeration order.
pub fn enumerate_projective_points(field: &PrimeField, ambient_dim: usize) -> Vec<ProjectivePoint<Fp>> {
    let p = field.modulus();
    let mut out = Vec::new();
    for lead in 0..=ambient_dim {
        let free = ambient_dim - lead;
        let total = (p as u128).pow(free as u32);
        for mut idx in 0..total {
            let mut coords = vec![Fp::zero(field); ambient_dim + 1];
            coords[lead] = Fp::one(field);
            for slot in 0..free {
                let digit = (idx % p as u128) as i64;
                idx /= p as u128;
                coords[lead + 1 + slot] = field.element(digit);
            }
            out.push(ProjectivePoint::new(coords).expect("leading one"));
        }
    }
    out
}

fn sorted_set<K: Scalar>(
    field: K::Field,
    ambient_dim: usize,
    points: Vec<ProjectivePoint<K>>,
) -> Result<PointSet<K>, GenError> {
    let set = PointSet::new(field, ambient_dim, points)?;
    Ok(set.sorted())
}

/// Transverse complete intersection of two plane curves over F_p: the common
/// zeros of two random forms of degrees d and e, accepted only when exactly
/// d*e distinct rational zeros exist and the forms are coprime. Together
/// those two filters certify a reduced transverse intersection whose points
/// are all rational.
pub fn gen_plane_ci(
    d: usize,
    e: usize,
    field: PrimeField,
    seed: u64,
) -> Result<Generated<Fp>, GenError> {
    if d < 1 || e < 1 {
        return Err(GenError::BadParameters("curve degrees must be at least 1".into()));
    }
    let ambient = enumerate_projective_points(&field, 2);
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let f: HomogeneousForm<Fp> = sample_split_form(&field, 2, d, &mut rng);
        let g: HomogeneousForm<Fp> = sample_split_form(&field, 2, e, &mut rng);
        let zeros: Vec<ProjectivePoint<Fp>> = ambient
            .iter()
            .filter(|p| f.eval(p).is_zero() && g.eval(p).is_zero())
            .cloned()
            .collect();
        if zeros.len() != d * e {
            continue;
        }
        if forms_coprime(&f, &g) != Some(true) {
            continue;
        }
        let points = sorted_set(field, 2, zeros)?;
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "ci-plane".into(),
                params: vec![
                    ("d".into(), d.to_string()),
                    ("e".into(), e.to_string()),
                    ("p".into(), field.modulus().to_string()),
                ],
                seed,
                expected_cb_level: (d + e).checked_sub(3).filter(|&k| k >= 1),
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("plane CI d={d}, e={e}, p={}", field.modulus()),
    })
}

/// Zero-dimensional complete intersection of n random hypersurfaces in P^n
/// over F_p. Accepted when the rational common zeros number exactly the
/// product of the degrees and the Jacobian has full rank at each of them,
/// which pins the intersection as reduced and entirely rational.
pub fn gen_ci_pn(degrees: &[usize], field: PrimeField, seed: u64) -> Result<Generated<Fp>, GenError> {
    let n = degrees.len();
    if n < 2 {
        return Err(GenError::BadParameters("need at least two hypersurface degrees".into()));
    }
    if degrees.iter().any(|&d| d < 1) {
        return Err(GenError::BadParameters("hypersurface degrees must be at least 1".into()));
    }
    if n == 2 {
        let mut gen = gen_plane_ci(degrees[0], degrees[1], field, seed)?;
        gen.provenance.generator = "ci-pn".into();
        return Ok(gen);
    }
    let expected: usize = degrees.iter().product();
    let ambient = enumerate_projective_points(&field, n);
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let forms: Vec<HomogeneousForm<Fp>> = degrees
            .iter()
            .map(|&d| sample_split_form(&field, n, d, &mut rng))
            .collect();
        let zeros: Vec<ProjectivePoint<Fp>> = ambient
            .iter()
            .filter(|p| forms.iter().all(|f| f.eval(p).is_zero()))
            .cloned()
            .collect();
        if zeros.len() != expected {
            continue;
        }
        let partials: Vec<Vec<HomogeneousForm<Fp>>> = forms
            .iter()
            .map(|f| (0..=n).map(|v| f.partial(v)).collect())
            .collect();
        let transverse = zeros.iter().all(|p| {
            let rows: Vec<Vec<Fp>> = partials
                .iter()
                .map(|grads| grads.iter().map(|g| g.eval(p)).collect())
                .collect();
            Matrix::from_rows(field, rows).expect("gradient rows").rank() == n
        });
        if !transverse {
            continue;
        }
        let points = sorted_set(field, n, zeros)?;
        let level_sum: usize = degrees.iter().sum();
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "ci-pn".into(),
                params: vec![
                    (
                        "degrees".into(),
                        degrees.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
                    ),
                    ("p".into(), field.modulus().to_string()),
                ],
                seed,
                expected_cb_level: level_sum.checked_sub(n + 1).filter(|&k| k >= 1),
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("CI {:?} in P^{n} over F_{}", degrees, field.modulus()),
    })
}

/// k+2 distinct points on a random line in P^n; the extremal CB(k) family.
pub fn gen_collinear<K: SampleScalar>(
    ambient_dim: usize,
    k: usize,
    field: K::Field,
    seed: u64,
) -> Result<Generated<K>, GenError> {
    if k < 1 || ambient_dim < 2 {
        return Err(GenError::BadParameters("need k >= 1 and ambient dimension >= 2".into()));
    }
    let count = k + 2;
    let char = K::spec(&field).characteristic();
    if char != 0 && (char as usize) + 1 < count {
        return Err(GenError::FieldTooSmall(format!(
            "a line over F_{char} has {} points, need {count}",
            char + 1
        )));
    }
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let a: ProjectivePoint<K> = sample_point(&field, ambient_dim, &mut rng);
        let b: ProjectivePoint<K> = sample_point(&field, ambient_dim, &mut rng);
        if a == b {
            continue;
        }
        // Points a + t b for distinct parameters t, plus b itself at t = infinity.
        let mut params: Vec<Option<K>> = Vec::new();
        let mut guard = 0;
        while params.len() < count && guard < 64 * count {
            guard += 1;
            let t = if rng.gen_ratio(1, (count + 1) as u32) {
                None
            } else {
                Some(K::sample(&field, &mut rng))
            };
            if !params.contains(&t) {
                params.push(t);
            }
        }
        if params.len() < count {
            continue;
        }
        let points: Vec<ProjectivePoint<K>> = params
            .iter()
            .map(|t| match t {
                None => b.clone(),
                Some(t) => {
                    let coords: Vec<K> = a
                        .coords()
                        .iter()
                        .zip(b.coords().iter())
                        .map(|(x, y)| x.add(&t.mul(y)))
                        .collect();
                    ProjectivePoint::new(coords).expect("a and b are independent")
                }
            })
            .collect();
        let points = sorted_set(field, ambient_dim, points)?;
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "collinear".into(),
                params: vec![
                    ("n".into(), ambient_dim.to_string()),
                    ("k".into(), k.to_string()),
                ],
                seed,
                expected_cb_level: Some(k),
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("collinear k={k} in P^{ambient_dim}"),
    })
}

/// s sample points on a rational normal curve of degree n in P^n, given by
/// x_i(t) = prod_{j != i} (t - beta_j) for random distinct beta. The beta
/// list is returned so tests can cross-check curve recovery.
pub fn gen_rnc_points<K: SampleScalar>(
    ambient_dim: usize,
    s: usize,
    field: K::Field,
    seed: u64,
) -> Result<(Generated<K>, RncParams<K>), GenError> {
    let n = ambient_dim;
    if n < 2 {
        return Err(GenError::BadParameters("rational normal curves need ambient dimension >= 2".into()));
    }
    if s < n + 3 {
        return Err(GenError::BadParameters(format!(
            "need at least n+3 = {} sample points, got {s}",
            n + 3
        )));
    }
    let char = K::spec(&field).characteristic();
    if char != 0 && ((char as usize) < s || (char as usize) < n + 1) {
        return Err(GenError::FieldTooSmall(format!(
            "F_{char} cannot hold {s} distinct parameters and {} distinct branch values",
            n + 1
        )));
    }
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let beta = match sample_distinct::<K, _>(&field, n + 1, &mut rng) {
            Some(b) => b,
            None => continue,
        };
        let ts = match sample_distinct::<K, _>(&field, s, &mut rng) {
            Some(t) => t,
            None => continue,
        };
        let points: Vec<ProjectivePoint<K>> = ts
            .iter()
            .map(|t| {
                let coords: Vec<K> = (0..=n)
                    .map(|i| {
                        let mut acc = K::one(&field);
                        for (j, b) in beta.iter().enumerate() {
                            if j != i {
                                acc = acc.mul(&t.sub(b));
                            }
                        }
                        acc
                    })
                    .collect();
                ProjectivePoint::new(coords).expect("curve points are nonzero")
            })
            .collect();
        let points = match sorted_set(field, n, points) {
            Ok(ps) => ps,
            Err(_) => continue, // parameter collision produced equal points
        };
        if points.len() != s {
            continue;
        }
        return Ok((
            Generated {
                points,
                provenance: Provenance {
                    generator: "rnc".into(),
                    params: vec![("n".into(), n.to_string()), ("s".into(), s.to_string())],
                    seed,
                    expected_cb_level: None,
                },
            },
            RncParams { beta },
        ));
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("rnc samples n={n}, s={s}"),
    })
}

fn sample_distinct<K: SampleScalar, R: Rng>(
    field: &K::Field,
    count: usize,
    rng: &mut R,
) -> Option<Vec<K>> {
    let mut out: Vec<K> = Vec::with_capacity(count);
    let mut guard = 0;
    while out.len() < count && guard < 64 * count.max(4) {
        guard += 1;
        let v = K::sample(field, rng);
        if !out.contains(&v) {
            out.push(v);
        }
    }
    (out.len() == count).then_some(out)
}

/// Union of random points drawn on random linear subspaces of the given
/// dimensions; the raw material for plane-configuration statements.
pub fn gen_plane_config<K: SampleScalar>(
    ambient_dim: usize,
    dims: &[usize],
    counts: &[usize],
    field: K::Field,
    seed: u64,
) -> Result<Generated<K>, GenError> {
    if dims.is_empty() || dims.len() != counts.len() {
        return Err(GenError::BadParameters("space dimensions and counts must match and be non-empty".into()));
    }
    if dims.iter().any(|&d| d < 1 || d >= ambient_dim) {
        return Err(GenError::BadParameters(format!(
            "space dimensions must be positive and below the ambient dimension {ambient_dim}"
        )));
    }
    let char = K::spec(&field).characteristic();
    if char != 0 {
        for (&d, &c) in dims.iter().zip(counts.iter()) {
            let mut size: u128 = 0;
            for i in 0..=d {
                size += (char as u128).pow(i as u32);
            }
            if (c as u128) > size {
                return Err(GenError::FieldTooSmall(format!(
                    "a {d}-dimensional space over F_{char} has {size} points, need {c}"
                )));
            }
        }
    }
    'attempt: for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let mut all_points: Vec<ProjectivePoint<K>> = Vec::new();
        for (&dim, &count) in dims.iter().zip(counts.iter()) {
            // A random subspace of projective dimension `dim`.
            let basis: Vec<ProjectivePoint<K>> = loop {
                let candidates: Vec<ProjectivePoint<K>> =
                    (0..=dim).map(|_| sample_point(&field, ambient_dim, &mut rng)).collect();
                let rows: Vec<Vec<K>> = candidates.iter().map(|p| p.coords().to_vec()).collect();
                let m = Matrix::from_rows(field, rows).expect("uniform rows");
                if m.rank() == dim + 1 {
                    break candidates;
                }
            };
            let mut placed = 0;
            let mut guard = 0;
            while placed < count {
                guard += 1;
                if guard > 64 * count.max(4) {
                    continue 'attempt;
                }
                let coeffs: Vec<K> = (0..=dim).map(|_| K::sample(&field, &mut rng)).collect();
                if coeffs.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let mut coords = vec![K::zero(&field); ambient_dim + 1];
                for (c, b) in coeffs.iter().zip(basis.iter()) {
                    for (slot, v) in coords.iter_mut().zip(b.coords().iter()) {
                        *slot = slot.add(&c.mul(v));
                    }
                }
                let p = ProjectivePoint::new(coords).expect("independent basis");
                if !all_points.contains(&p) {
                    all_points.push(p);
                    placed += 1;
                }
            }
        }
        let points = sorted_set(field, ambient_dim, all_points)?;
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "plane-config".into(),
                params: vec![
                    ("n".into(), ambient_dim.to_string()),
                    (
                        "dims".into(),
                        dims.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
                    ),
                    (
                        "counts".into(),
                        counts.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
                    ),
                ],
                seed,
                expected_cb_level: None,
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("plane configuration dims={dims:?} counts={counts:?} in P^{ambient_dim}"),
    })
}

/// m distinct uniformly drawn points of P^n; rejection-sampled raw material
/// for the fuzzer.
pub fn gen_random<K: SampleScalar>(
    ambient_dim: usize,
    m: usize,
    field: K::Field,
    seed: u64,
) -> Result<Generated<K>, GenError> {
    if m < 1 || ambient_dim < 1 {
        return Err(GenError::BadParameters("need m >= 1 points and ambient dimension >= 1".into()));
    }
    let char = K::spec(&field).characteristic();
    if char != 0 {
        let mut size: u128 = 0;
        for i in 0..=ambient_dim {
            size += (char as u128).pow(i as u32);
        }
        if (m as u128) > size {
            return Err(GenError::FieldTooSmall(format!(
                "P^{ambient_dim}(F_{char}) has {size} points, need {m}"
            )));
        }
    }
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let mut points: Vec<ProjectivePoint<K>> = Vec::with_capacity(m);
        let mut guard = 0;
        while points.len() < m && guard < 64 * m.max(4) {
            guard += 1;
            let p = sample_point(&field, ambient_dim, &mut rng);
            if !points.contains(&p) {
                points.push(p);
            }
        }
        if points.len() < m {
            continue;
        }
        let points = sorted_set(field, ambient_dim, points)?;
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "random".into(),
                params: vec![("n".into(), ambient_dim.to_string()), ("m".into(), m.to_string())],
                seed,
                expected_cb_level: None,
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: format!("{m} random points in P^{ambient_dim}"),
    })
}

/// Replaces one random point of Γ by a random point outside Γ; positions of
/// the other points are preserved. The standard negative control.
pub fn perturb_one<K: SampleScalar>(gamma: &PointSet<K>, seed: u64) -> Result<Generated<K>, GenError> {
    if gamma.is_empty() {
        return Err(GenError::BadParameters("cannot perturb an empty set".into()));
    }
    let field = *gamma.field();
    let n = gamma.ambient_dim();
    for attempt in 0..DEFAULT_ATTEMPT_BUDGET {
        let mut rng = rng_for(seed, attempt as u64);
        let victim = rng.gen_range(0..gamma.len());
        let mut replacement = None;
        for _ in 0..256 {
            let p = sample_point(&field, n, &mut rng);
            if !gamma.contains_point(&p) {
                replacement = Some(p);
                break;
            }
        }
        let Some(p) = replacement else { continue };
        let mut points: Vec<ProjectivePoint<K>> = gamma.points().to_vec();
        points[victim] = p;
        let points = PointSet::new(field, n, points)?;
        return Ok(Generated {
            points,
            provenance: Provenance {
                generator: "perturb-one".into(),
                params: vec![("index".into(), victim.to_string())],
                seed,
                expected_cb_level: None,
            },
        });
    }
    Err(GenError::BudgetExhausted {
        budget: DEFAULT_ATTEMPT_BUDGET,
        what: "perturbation".into(),
    })
}
