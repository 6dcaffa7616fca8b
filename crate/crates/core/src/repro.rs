//! Reproduction scenarios for the worked examples: octonions, sedenions, the
//! Hermitian octonionic Jordan algebra, and the power identities.
//!
//! Each scenario yields one [`ReproEntry`]; the report is sorted by id and
//! serializes to one JSON object per line with a fixed field order.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::HomAlgebra;
use crate::calculus::{f_components, fourth_defects, hom_associator, hom_power, FIndexSets};
use crate::constructions::{
    calibrate_sedenions, hermitian_jordan, imaginary_units_anticommute, lambda_algebra, listed_sedenion_map,
    load_octonions, octonion_automorphism, quadruple_automorphism, sedenion_left_alternative_defect, sedenions,
    twist_product, twist_unchecked, twisted_jordan, twisted_octonions, yau_twist, BasicQuadruple,
};
use crate::element::Element;
use crate::identities::{
    check_nth_hpa_random, class_predicate, decide_hpa, is_third_hpa, verify_a3_theorem, verify_chain_lemmas,
    verify_commute_identity, AlgebraClass, CheckConfig, CheckReport, ThirdMethod, Verdict,
};
use crate::linear_map::LinearMap;
use crate::random::{self, random_hom_algebra, AlphaKind, RandomAlgebraFlags};
use crate::scalar::{self, Scalar};

/// The twisted octonion table `μ_α(e_i, e_j)` as printed, `(sign, index)`.
pub const PRINTED_TWISTED_OCTONION_TABLE: [[(i8, u8); 8]; 8] = [
    [(1, 0), (1, 5), (1, 6), (1, 7), (1, 1), (1, 2), (1, 3), (1, 4)],
    [(1, 5), (-1, 0), (1, 1), (1, 4), (-1, 6), (1, 3), (-1, 2), (-1, 7)],
    [(1, 6), (-1, 1), (-1, 0), (1, 2), (1, 5), (-1, 7), (1, 4), (-1, 3)],
    [(1, 7), (-1, 4), (-1, 2), (-1, 0), (1, 3), (1, 6), (-1, 1), (1, 5)],
    [(1, 1), (1, 6), (-1, 5), (-1, 3), (-1, 0), (1, 4), (1, 7), (-1, 2)],
    [(1, 2), (-1, 3), (1, 7), (-1, 6), (-1, 4), (-1, 0), (1, 5), (1, 1)],
    [(1, 3), (1, 2), (-1, 4), (1, 1), (-1, 7), (-1, 5), (-1, 0), (1, 6)],
    [(1, 4), (1, 7), (1, 3), (-1, 5), (1, 2), (-1, 1), (-1, 6), (-1, 0)],
];

/// Quadruple images used where the listed sedenion map is needed but fails
/// to be an automorphism: `(e1, e2, e4, e8) ↦ (e1, e3, e4, e8)`.
pub const SUBSTITUTE_QUADRUPLE: [usize; 4] = [1, 3, 4, 8];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Paper,
    Derived,
    Conditional,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReproVerdict {
    Pass,
    Fail,
    ConditionalSkip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReproEntry {
    pub id: String,
    pub provenance: Provenance,
    pub expected: String,
    pub computed: String,
    pub verdict: ReproVerdict,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ReproReport {
    pub entries: Vec<ReproEntry>,
}

impl ReproReport {
    pub fn to_jsonl(&self) -> String {
        self.entries.iter().map(|e| serde_json::to_string(e).expect("plain data") + "\n").collect()
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.verdict != ReproVerdict::Fail)
    }

    pub fn get(&self, id: &str) -> Option<&ReproEntry> {
        self.entries.iter().find(|e| e.id == id)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ReproConfig {
    pub seed: u64,
    pub trials: usize,
    pub max_n: usize,
}

impl Default for ReproConfig {
    fn default() -> Self {
        ReproConfig { seed: 0, trials: 50, max_n: 8 }
    }
}

impl ReproConfig {
    fn check(&self) -> CheckConfig {
        CheckConfig { seed: self.seed, trials: self.trials, ..CheckConfig::default() }
    }
}

fn entry(
    id: &str,
    provenance: Provenance,
    expected: impl Into<String>,
    computed: impl Into<String>,
    ok: bool,
) -> ReproEntry {
    ReproEntry {
        id: id.into(),
        provenance,
        expected: expected.into(),
        computed: computed.into(),
        verdict: if ok { ReproVerdict::Pass } else { ReproVerdict::Fail },
    }
}

fn conditional(id: &str, expected: impl Into<String>, computed: String, ok: bool) -> ReproEntry {
    let mut e = entry(id, Provenance::Conditional, expected, computed, ok);
    if !ok {
        let cal = calibrate_sedenions();
        e.verdict = ReproVerdict::ConditionalSkip;
        e.computed = format!("{}; table convention {} ({})", e.computed, cal.selected, cal.rule);
    }
    e
}

fn summary(r: &CheckReport) -> String {
    match &r.witness {
        Some(w) => format!(
            "{} {} at [{}] = {}",
            r.property,
            r.verdict,
            w.args.iter().map(|a| a.to_string()).collect::<Vec<_>>().join("; "),
            w.defect
        ),
        None => format!("{} {}", r.property, r.verdict),
    }
}

fn summaries(rs: &[CheckReport]) -> String {
    rs.iter().map(summary).collect::<Vec<_>>().join(", ")
}

fn random_elements(dim: usize, count: usize, seed: u64) -> Vec<Element> {
    let mut rng = random::rng(seed);
    (0..count).map(|_| random::element_from(&mut rng, dim, 9)).collect()
}

fn table_of(h: &HomAlgebra) -> Vec<Vec<Element>> {
    (0..h.dim()).map(|i| (0..h.dim()).map(|j| h.basis_product(i, j)).collect()).collect()
}

/// The listed sedenion map twisted into `𝕊` without a morphism check.
pub fn listed_sedenion_twist() -> HomAlgebra {
    twist_unchecked(&sedenions(), &listed_sedenion_map()).expect("dim 16")
}

/// `(𝕊, βμ, Id)` for the listed map `β`.
pub fn listed_sedenion_product_twist() -> HomAlgebra {
    twist_product(&sedenions(), &listed_sedenion_map()).expect("dim 16")
}

pub fn substitute_sedenion_automorphism() -> crate::error::Result<LinearMap> {
    let s = sedenions();
    let src = BasicQuadruple::new(&s, [1, 2, 4, 8])?;
    let dst = BasicQuadruple::new(&s, SUBSTITUTE_QUADRUPLE)?;
    quadruple_automorphism(&s, &src, &dst)
}

fn oct_table_automorphism(_: &ReproConfig) -> ReproEntry {
    let computed = match octonion_automorphism() {
        Ok(_) => "multiplicative on all 64 basis pairs".to_string(),
        Err(e) => e.to_string(),
    };
    let ok = computed.starts_with("multiplicative");
    entry("oct-table-automorphism", Provenance::Paper, "multiplicative on all 64 basis pairs", computed, ok)
}

fn oct_twisted_table(_: &ReproConfig) -> ReproEntry {
    let t = table_of(&twisted_octonions());
    let mut mismatches = Vec::new();
    for (i, row) in PRINTED_TWISTED_OCTONION_TABLE.iter().enumerate() {
        for (j, &(s, k)) in row.iter().enumerate() {
            if t[i][j] != Element::basis(8, k as usize).scale_int(s as i64) {
                mismatches.push(format!("e{i}*e{j} = {}", t[i][j]));
            }
        }
    }
    let computed = if mismatches.is_empty() { "64 of 64 entries match".into() } else { mismatches.join(", ") };
    entry("oct-twisted-table", Provenance::Paper, "64 of 64 entries match", computed, mismatches.is_empty())
}

fn oct_associator_witness(_: &ReproConfig) -> ReproEntry {
    let o = twisted_octonions();
    let x = o.basis(1);
    let ax = o.alpha().apply(&x).expect("dim 8");
    let aax = o.alpha().apply(&ax).expect("dim 8");
    let v = hom_associator(&o, &x, &ax, &aax).expect("dim 8");
    let expected = Element::basis(8, 1).scale_int(-2);
    entry("oct-associator-witness", Provenance::Paper, expected.to_string(), v.to_string(), v == expected)
}

fn oct_alpha_classification(cfg: &ReproConfig) -> ReproEntry {
    let o = twisted_octonions();
    let c = cfg.check();
    let mut reports = vec![class_predicate(&o, AlgebraClass::HomAlternative, &c), decide_hpa(&o, &c)];
    for n in 5..=cfg.max_n.max(5) {
        reports.push(check_nth_hpa_random(&o, n, cfg.trials, cfg.seed.wrapping_add(n as u64)));
    }
    let mult = o.is_multiplicative();
    let ok = mult && reports.iter().all(CheckReport::passed);
    entry(
        "oct-alpha-classification",
        Provenance::Paper,
        "multiplicative, hom-alternative, hpa, random nth checks pass",
        format!("multiplicative {mult}; {}", summaries(&reports)),
        ok,
    )
}

fn sedenion_units(_: &ReproConfig) -> ReproEntry {
    let s = sedenions();
    let ok = s.dim() == 16 && imaginary_units_anticommute(&s);
    entry(
        "sedenion-units",
        Provenance::Paper,
        "dim 16, e_i^2 = -e0, e_i e_j = -e_j e_i",
        format!("dim {}, units anticommute {}", s.dim(), imaginary_units_anticommute(&s)),
        ok,
    )
}

fn sedenion_left_alt(_: &ReproConfig) -> (ReproEntry, ReproEntry) {
    let s = sedenions();
    let x = Element::from_terms(16, &[(1, 1), (8, 1)]);
    let y = Element::from_terms(16, &[(3, 1), (9, 1)]);
    let xx_y = s.mul_unchecked(&s.mul_unchecked(&x, &x), &y);
    let x_xy = s.mul_unchecked(&x, &s.mul_unchecked(&x, &y));
    let defect = sedenion_left_alternative_defect(&s);
    let expected = Element::from_terms(16, &[(3, -2), (9, -2)]);
    let failure = entry(
        "sedenion-left-alt-failure",
        Provenance::Paper,
        format!("(xx)y = {expected}, (xx)y - x(xy) != 0"),
        format!("(xx)y = {xx_y}, (xx)y - x(xy) = {defect}"),
        xx_y == expected && !defect.is_zero(),
    );
    let printed = Element::from_terms(16, &[(3, -1), (5, 1), (9, -2), (10, -1), (12, -1)]);
    let value = conditional(
        "sedenion-left-alt-value",
        format!("x(xy) = {printed}"),
        format!("x(xy) = {x_xy}"),
        x_xy == printed,
    );
    (failure, value)
}

fn sedenion_quadruple(_: &ReproConfig) -> ReproEntry {
    let s = sedenions();
    let computed = BasicQuadruple::new(&s, [1, 2, 4, 8])
        .and_then(|src| BasicQuadruple::new(&s, [5, 7, 6, 15]).map(|dst| (src, dst)))
        .and_then(|(src, dst)| quadruple_automorphism(&s, &src, &dst));
    let (text, ok) = match computed {
        Ok(b) => (format!("automorphism, listed images match {}", b == listed_sedenion_map()), true),
        Err(e) => (format!("{} ({e})", e.code()), false),
    };
    entry("sedenion-quadruple-automorphism", Provenance::Paper, "verified automorphism", text, ok)
}

fn sedenion_twist_hpa(cfg: &ReproConfig) -> ReproEntry {
    let s = sedenions();
    let beta = listed_sedenion_map();
    let r = match yau_twist(&s, &beta) {
        Ok(sb) => decide_hpa(&sb, &cfg.check()),
        Err(_) => decide_hpa(&listed_sedenion_twist(), &cfg.check()),
    };
    let detail = r.notes.first().cloned().unwrap_or_default();
    entry("sedenion-twist-hpa", Provenance::Paper, "hpa pass", format!("hpa {} {detail}", r.verdict), r.passed())
}

fn untwisted_third(cfg: &ReproConfig) -> (ReproEntry, ReproEntry) {
    let h = listed_sedenion_product_twist();
    let r = is_third_hpa(&h, ThirdMethod::S3Sum, &cfg.check());
    let one_plus =
        r.witness.as_ref().and_then(|w| (1..16).find(|&i| w.args.len() == 1 && w.args[0] == h.one_plus_basis(i)));
    let failure = entry(
        "sedenion-untwisted-third-hpa",
        Provenance::Paper,
        "third-hpa fail with witness 1 + e_i",
        summary(&r),
        r.verdict == Verdict::Fail && one_plus.is_some(),
    );
    let x = h.one_plus_basis(1);
    let xx = h.mul_unchecked(&x, &x);
    let left = h.mul_unchecked(&xx, &x);
    let right = h.mul_unchecked(&x, &xx);
    let exp_left = Element::from_terms(16, &[(3, -2), (6, 2)]);
    let exp_right = Element::from_terms(16, &[(3, -2), (6, -2)]);
    let value = conditional(
        "sedenion-untwisted-witness-value",
        format!("x = 1 + e1: (xx)x = {exp_left}, x(xx) = {exp_right}"),
        format!("x = 1 + e1: (xx)x = {left}, x(xx) = {right}"),
        left == exp_left && right == exp_right,
    );
    (failure, value)
}

fn sedenion_quadratic_law(cfg: &ReproConfig) -> ReproEntry {
    let s = sedenions();
    let xs = random_elements(16, cfg.trials, cfg.seed);
    let bad = xs.iter().position(|x| {
        let a: Scalar = -x.coords().iter().map(|c| c * c).sum::<Scalar>();
        let b = x.coord(0) * scalar::int(2);
        s.mul_unchecked(x, x) != &Element::basis(16, 0).scale(&a) + &x.scale(&b)
    });
    entry(
        "sedenion-quadratic-law",
        Provenance::Paper,
        format!("x^2 = a + bx for {} random x", cfg.trials),
        match bad {
            None => format!("holds for {} of {}", cfg.trials, cfg.trials),
            Some(i) => format!("fails at sample {i}"),
        },
        bad.is_none(),
    )
}

/// `(xⁿ)' = β^{n-1}(xⁿ)` between `h` and `twisted` for `n ≤ 6`.
pub fn twist_power_law_failure(
    h: &HomAlgebra,
    twisted: &HomAlgebra,
    beta: &LinearMap,
    xs: &[Element],
) -> Option<(usize, usize)> {
    xs.iter().enumerate().find_map(|(t, x)| {
        (1..=6).find_map(|n| {
            let lhs = hom_power(twisted, x, n).expect("same dim");
            let rhs = beta.power(n as u32 - 1).apply(&hom_power(h, x, n).expect("same dim")).expect("same dim");
            (lhs != rhs).then_some((t, n))
        })
    })
}

fn power_law_entry(id: &str, provenance: Provenance, beta: &LinearMap, cfg: &ReproConfig) -> ReproEntry {
    let s = sedenions();
    let twisted = twist_unchecked(&s, beta).expect("dim 16");
    let xs = random_elements(16, 20, cfg.seed);
    let bad = twist_power_law_failure(&s, &twisted, beta, &xs);
    entry(
        id,
        provenance,
        "(x^n)' = β^(n-1)(x^n), n ≤ 6, 20 random x",
        match bad {
            None => "holds for 20 of 20".into(),
            Some((t, n)) => format!("fails at sample {t}, n = {n}"),
        },
        bad.is_none(),
    )
}

fn lambda_suite(cfg: &ReproConfig) -> ReproEntry {
    let o = twisted_octonions();
    let xs = random_elements(8, 20, cfg.seed);
    let mut problems = Vec::new();
    for lam in [scalar::zero(), scalar::ratio(1, 2), scalar::int(2), scalar::int(-3)] {
        let al = lambda_algebra(&o, &lam);
        for x in &xs {
            if let Some(l) = (1..=6).find(|&l| hom_power(&al, x, l).ok() != hom_power(&o, x, l).ok()) {
                problems.push(format!("λ = {}: powers differ at l = {l}", scalar::format(&lam)));
                break;
            }
        }
        let r = decide_hpa(&al, &cfg.check());
        if !r.passed() {
            problems.push(format!("λ = {}: {}", scalar::format(&lam), summary(&r)));
        }
    }
    let ok = problems.is_empty();
    entry(
        "lambda-suite",
        Provenance::Paper,
        "powers coincide for l ≤ 6 and hpa passes for λ in {0, 1/2, 2, -3}",
        if ok { "all four λ pass".into() } else { problems.join("; ") },
        ok,
    )
}

/// Cascade identities `F(x,x,x,x) = 24B(x)`, `D(x,x) = 6B(x)`,
/// `E(x,y,x) = 2D(x,y)`, `F(x,y,z,y) = 2E(x,y,z)`; returns the first failing
/// sample and identity.
pub fn f_cascade_failure(h: &HomAlgebra, trials: usize, seed: u64) -> Option<(usize, &'static str)> {
    let mut rng = random::rng(seed);
    let d = h.dim();
    let f = FIndexSets::default();
    (0..trials).find_map(|t| {
        let [x, y, z] = [0; 3].map(|_| random::element_from(&mut rng, d, 9));
        let b = fourth_defects(h, std::slice::from_ref(&x)).expect("dim");
        let dxx = fourth_defects(h, &[x.clone(), x.clone()]).expect("dim");
        let dxy = fourth_defects(h, &[x.clone(), y.clone()]).expect("dim");
        let exyx = fourth_defects(h, &[x.clone(), y.clone(), x.clone()]).expect("dim");
        let exyz = fourth_defects(h, &[x.clone(), y.clone(), z.clone()]).expect("dim");
        let fxxxx = f.evaluate(h, [&x, &x, &x, &x]).f;
        let fxyzy = f.evaluate(h, [&x, &y, &z, &y]).f;
        if fxxxx != b.scale_int(24) {
            Some((t, "F(x,x,x,x) = 24B(x)"))
        } else if dxx != b.scale_int(6) {
            Some((t, "D(x,x) = 6B(x)"))
        } else if exyx != dxy.scale_int(2) {
            Some((t, "E(x,y,x) = 2D(x,y)"))
        } else if fxyzy != exyz.scale_int(2) {
            Some((t, "F(x,y,z,y) = 2E(x,y,z)"))
        } else {
            None
        }
    })
}

fn f_cascade_entry(id: &str, provenance: Provenance, h: &HomAlgebra, cfg: &ReproConfig) -> ReproEntry {
    let bad = f_cascade_failure(h, cfg.trials, cfg.seed);
    entry(
        id,
        provenance,
        format!("F, B, D, E cascade identities on {} random tuples", cfg.trials),
        match bad {
            None => format!("hold on {} of {}", cfg.trials, cfg.trials),
            Some((t, which)) => format!("{which} fails at sample {t}"),
        },
        bad.is_none(),
    )
}

fn f_octonion_basis(_: &ReproConfig) -> ReproEntry {
    let o = twisted_octonions();
    let quads: Vec<[usize; 4]> = (0..4096).map(|n| [n >> 9, (n >> 6) & 7, (n >> 3) & 7, n & 7]).collect();
    let e: Vec<Element> = (0..8).map(|i| o.basis(i)).collect();
    let bad = quads
        .par_iter()
        .find_first(|q| !f_components(&o, &e[q[0]], &e[q[1]], &e[q[2]], &e[q[3]]).expect("dim 8").f.is_zero());
    entry(
        "f-octonion-basis",
        Provenance::Paper,
        "F = 0 on all 4096 basis quadruples",
        match bad {
            None => "F = 0 on 4096 of 4096".into(),
            Some(q) => format!("F(e{}, e{}, e{}, e{}) != 0", q[0], q[1], q[2], q[3]),
        },
        bad.is_none(),
    )
}

/// Lemma verifier over `n = n_lo..=max_n` and 20 random `x`.
fn lemma_entry(
    id: &str,
    provenance: Provenance,
    h: &HomAlgebra,
    n_lo: usize,
    cfg: &ReproConfig,
    verify: fn(&HomAlgebra, usize, &Element, &CheckConfig) -> crate::error::Result<CheckReport>,
) -> ReproEntry {
    let xs = random_elements(h.dim(), 20, cfg.seed);
    let c = cfg.check();
    let mut first_bad = None;
    'outer: for n in n_lo..=cfg.max_n {
        for x in &xs {
            let r = verify(h, n, x, &c).expect("dims match");
            if !r.passed() {
                first_bad = Some(format!("n = {n}: {}; {}", summary(&r), r.notes.join("; ")));
                break 'outer;
            }
        }
    }
    entry(
        id,
        provenance,
        format!("holds for n = {n_lo}..{} on 20 random x", cfg.max_n),
        first_bad.clone().unwrap_or_else(|| "all pass".into()),
        first_bad.is_none(),
    )
}

/// Sample corpus for the equivalence sweep: 100 seeded random 3-dimensional
/// Hom-algebras cycling through the three `α` kinds.
pub fn sweep_corpus(seed: u64) -> Vec<HomAlgebra> {
    let kinds = [AlphaKind::Identity, AlphaKind::Random, AlphaKind::Multiplicative];
    (0..100u64)
        .map(|i| {
            let flags = RandomAlgebraFlags { alpha: kinds[i as usize % 3] };
            let density = [0.3, 0.5, 0.8][(i as usize / 3) % 3];
            random_hom_algebra(3, density, seed.wrapping_mul(1000).wrapping_add(i), flags)
        })
        .collect()
}

/// The constructed algebras joined to the sweep.
pub fn constructed_corpus() -> Vec<(&'static str, HomAlgebra)> {
    let o = twisted_octonions();
    let mut out = vec![
        ("octonions", load_octonions()),
        ("twisted-octonions", o.clone()),
        ("twisted-octonions-lambda-1/2", lambda_algebra(&o, &scalar::ratio(1, 2))),
        ("twisted-octonions-lambda-2", lambda_algebra(&o, &scalar::int(2))),
        ("sedenions", sedenions()),
        ("sedenions-listed-twist", listed_sedenion_twist()),
        ("sedenions-listed-product-twist", listed_sedenion_product_twist()),
        ("jordan27", hermitian_jordan()),
        ("jordan27-twisted", twisted_jordan()),
    ];
    if let Ok(beta) = substitute_sedenion_automorphism() {
        out.push(("sedenions-substitute-twist", yau_twist(&sedenions(), &beta).expect("automorphism")));
    }
    out
}

/// Result of the sweep on one algebra; `None` means consistent.
pub fn sweep_one(h: &HomAlgebra, cfg: &CheckConfig, seed: u64) -> Option<String> {
    let verdicts: Vec<Verdict> = ThirdMethod::ALL.iter().map(|&m| is_third_hpa(h, m, cfg).verdict).collect();
    if verdicts.iter().any(|v| *v != verdicts[0]) {
        return Some(format!("third-hpa methods disagree: {verdicts:?}"));
    }
    let a3 = verify_a3_theorem(h, cfg);
    if !a3.passed() {
        return Some(format!("a3 theorem: {}", a3.notes.join("; ")));
    }
    if h.is_multiplicative() {
        let decided = decide_hpa(h, cfg);
        let nth: Vec<CheckReport> =
            (2..=6).map(|n| check_nth_hpa_random(h, n, 10, seed.wrapping_add(n as u64))).collect();
        let all = nth.iter().all(CheckReport::passed);
        if decided.passed() != all {
            return Some(format!("hpa {} but random checks: {}", decided.verdict, summaries(&nth)));
        }
    }
    None
}

fn equivalence_sweep(cfg: &ReproConfig) -> ReproEntry {
    let c = cfg.check();
    let corpus = sweep_corpus(cfg.seed);
    let bad_random = corpus
        .par_iter()
        .enumerate()
        .find_map_first(|(i, h)| sweep_one(h, &c, cfg.seed).map(|m| format!("random #{i}: {m}")));
    let bad = bad_random.or_else(|| {
        constructed_corpus()
            .par_iter()
            .find_map_first(|(name, h)| sweep_one(h, &c, cfg.seed).map(|m| format!("{name}: {m}")))
    });
    entry(
        "equivalence-sweep",
        Provenance::Derived,
        "third-hpa methods agree, a3 theorem holds, hpa consistent with random nth checks",
        bad.clone().unwrap_or_else(|| "100 random + constructed algebras consistent".into()),
        bad.is_none(),
    )
}

fn jordan_entries(cfg: &ReproConfig) -> Vec<ReproEntry> {
    let j = hermitian_jordan();
    let jt = twisted_jordan();
    let comm = j.is_commutative();
    let mult = jt.is_multiplicative();
    let hj = class_predicate(&jt, AlgebraClass::HomJordan, &cfg.check());
    let mut rng = random::rng(cfg.seed);
    let witness = (0..200).find_map(|_| {
        let x = random::element_from(&mut rng, 27, 2);
        let ax = jt.alpha().apply_unchecked(&x);
        let aax = jt.alpha().apply_unchecked(&ax);
        let v = hom_associator(&jt, &x, &ax, &aax).expect("dim 27");
        (!v.is_zero()).then_some((x, v))
    });
    vec![
        entry(
            "jordan-commutative",
            Provenance::Paper,
            "commutative on all basis pairs",
            format!("commutative {comm}"),
            comm,
        ),
        entry(
            "jordan-twisted-multiplicative",
            Provenance::Paper,
            "multiplicative",
            format!("multiplicative {mult}"),
            mult,
        ),
        entry("jordan-hom-jordan", Provenance::Paper, "hom-jordan pass (probabilistic)", summary(&hj), hj.passed()),
        entry(
            "jordan-nonassoc-witness",
            Provenance::Derived,
            "some X with as(X, α(X), α²(X)) != 0",
            match &witness {
                Some((x, v)) => format!("X = {x}, as = {v}"),
                None => "none found in 200 samples".into(),
            },
            witness.is_some(),
        ),
    ]
}

fn substitute_entries(cfg: &ReproConfig) -> Vec<ReproEntry> {
    let s = sedenions();
    let beta = match substitute_sedenion_automorphism() {
        Ok(b) => b,
        Err(e) => {
            return vec![entry(
                "sedenion-substitute-automorphism",
                Provenance::Derived,
                "verified automorphism",
                e.to_string(),
                false,
            )]
        }
    };
    let sb = yau_twist(&s, &beta).expect("automorphism");
    let hpa = decide_hpa(&sb, &cfg.check());
    vec![
        entry(
            "sedenion-substitute-automorphism",
            Provenance::Derived,
            "verified automorphism",
            format!(
                "(e1,e2,e4,e8) -> (e1,e3,e4,e8) multiplicative {}",
                s.multiplicativity_defect(&beta).expect("dim").is_none()
            ),
            true,
        ),
        entry("sedenion-substitute-twist-hpa", Provenance::Derived, "hpa pass", summary(&hpa), hpa.passed()),
        power_law_entry("sedenion-substitute-power-law", Provenance::Derived, &beta, cfg),
        lemma_entry("sedenion-substitute-chain-lemmas", Provenance::Derived, &sb, 5, cfg, verify_chain_lemmas),
        lemma_entry("sedenion-substitute-commute-identity", Provenance::Derived, &sb, 4, cfg, verify_commute_identity),
    ]
}

type Scenario = (&'static str, fn(&ReproConfig) -> Vec<ReproEntry>);

fn scenarios() -> Vec<Scenario> {
    vec![
        ("oct-table-automorphism", |c| vec![oct_table_automorphism(c)]),
        ("oct-twisted-table", |c| vec![oct_twisted_table(c)]),
        ("oct-associator-witness", |c| vec![oct_associator_witness(c)]),
        ("oct-alpha-classification", |c| vec![oct_alpha_classification(c)]),
        ("sedenion-units", |c| vec![sedenion_units(c)]),
        ("sedenion-left-alt", |c| {
            let (a, b) = sedenion_left_alt(c);
            vec![a, b]
        }),
        ("sedenion-quadruple-automorphism", |c| vec![sedenion_quadruple(c)]),
        ("sedenion-twist-hpa", |c| vec![sedenion_twist_hpa(c)]),
        ("sedenion-untwisted", |c| {
            let (a, b) = untwisted_third(c);
            vec![a, b]
        }),
        ("sedenion-quadratic-law", |c| vec![sedenion_quadratic_law(c)]),
        ("sedenion-twist-power-law", |c| {
            vec![power_law_entry("sedenion-twist-power-law", Provenance::Paper, &listed_sedenion_map(), c)]
        }),
        ("lambda-suite", |c| vec![lambda_suite(c)]),
        ("f-sedenion-cascade", |c| {
            vec![f_cascade_entry("f-sedenion-cascade", Provenance::Paper, &listed_sedenion_twist(), c)]
        }),
        ("f-octonion-basis", |c| vec![f_octonion_basis(c)]),
        ("chain-lemmas-octonion", |c| {
            vec![lemma_entry(
                "chain-lemmas-octonion",
                Provenance::Paper,
                &twisted_octonions(),
                5,
                c,
                verify_chain_lemmas,
            )]
        }),
        ("chain-lemmas-sedenion", |c| {
            vec![lemma_entry(
                "chain-lemmas-sedenion",
                Provenance::Paper,
                &listed_sedenion_twist(),
                5,
                c,
                verify_chain_lemmas,
            )]
        }),
        ("commute-identity-octonion", |c| {
            vec![lemma_entry(
                "commute-identity-octonion",
                Provenance::Paper,
                &twisted_octonions(),
                4,
                c,
                verify_commute_identity,
            )]
        }),
        ("commute-identity-sedenion", |c| {
            vec![lemma_entry(
                "commute-identity-sedenion",
                Provenance::Paper,
                &listed_sedenion_twist(),
                4,
                c,
                verify_commute_identity,
            )]
        }),
        ("equivalence-sweep", |c| vec![equivalence_sweep(c)]),
        ("jordan", jordan_entries),
        ("sedenion-substitute", substitute_entries),
    ]
}

/// Runs the scenarios whose entry ids contain `filter` (all when `None`).
pub fn repro_paper(filter: Option<&str>, cfg: &ReproConfig) -> ReproReport {
    let wanted = |id: &str| filter.is_none_or(|f| id.contains(f) || f.starts_with(id));
    let selected: Vec<Scenario> = scenarios().into_iter().filter(|(group, _)| wanted(group)).collect();
    let mut entries: Vec<ReproEntry> = selected.par_iter().flat_map(|(_, run)| run(cfg)).collect();
    entries.retain(|e| filter.is_none_or(|f| e.id.contains(f)) || selected.iter().any(|(g, _)| Some(*g) == filter));
    entries.sort_by(|a, b| a.id.cmp(&b.id));
    ReproReport { entries }
}
