//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the lines always print.
//! A criterion is a list of named parts; it passes iff every part does.
//! Parts listed in `KNOWN_RED` are expected to fail and are reported as
//! such. The run fails on any other failing part, and also on a known-red
//! part that starts passing, so the list cannot go stale.

use std::time::Instant;

use abcat::ab::{cotilting_check, right_approx, SubcatSpec, Universe};
use abcat::algebra::decompose::HomDimMatrix;
use abcat::algebra::homological::{projective_cover, projective_dimension, HomDim};
use abcat::algebra::nakayama::{enumerate_indecomposables, nakayama, two_cycle_family, Shape};
use abcat::algebra::{hom_basis, iso_test, Algebra, Module, Morphism};
use abcat::ab::{relative_syzygy_resolution, vanishing_presentation};
use abcat::io::Report;
use abcat::lincat::functor::{injective_functor, representable};
use abcat::lincat::resolution::{homological_report, minimal_resolution};
use abcat::lincat::weak_kernel::{check_weak_kernel, weak_kernel};
use abcat::lincat::{CategoryAlgebra, LinCat};
use abcat::linalg::{Field, Mat, Q};
use abcat::singeq::{
    ar_duality_check, family_report, perp_quotient_bounds, restriction_pd_check, stable_gd_check, FamilyReport,
};
use abcat::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CUTOFF: usize = 60;
/// Frozen after an oracle run: gd of `mod Λ/[T]` and `⊥T/[T]` for n = 1.
const GD_MOD_BAR_N1: usize = 3;
const GD_PERP_BAR_N1: usize = 1;
const RANDOM_INSTANCES_PER_ALGEBRA: usize = 8;

/// `(criterion, part)` pairs that fail for a recorded reason.
///
/// The minimal resolution of `I_3` over `⊥T/[T]` has an extra `[1]_2` term
/// in degree 1 that the displayed sequence omits: `Ω^1 I_3` is the simple
/// functor at `[1]_2`, so the term is forced. Everything after it matches
/// the display, and the recurrence is `Ω^3 ≅ Ω^9` instead of `Ω^2 ≅ Ω^8`.
const KNOWN_RED: &[(&str, &str)] = &[
    ("C01", "I3 terms equal the displayed sequence"),
    ("C01", "Ω^2 I3 ≅ Ω^8 I3"),
    ("C03", "I3 terms equal the displayed sequence"),
    ("C03", "Ω^2 I3 ≅ Ω^8 I3"),
];

#[derive(Default)]
struct Outcome {
    parts: Vec<(String, bool, String)>,
}

impl Outcome {
    fn part(&mut self, name: &str, ok: bool, detail: impl Into<String>) {
        self.parts.push((name.to_string(), ok, detail.into()));
    }
}

type Check = fn() -> Result<Outcome>;

fn t_of<F: Field>(u: &Universe<F>, n: usize) -> Result<SubcatSpec> {
    SubcatSpec::from_labels("T", u, &["[1]_1", &format!("[1]_{}", 2 * n + 2)])
}

/// `mod Λ/[T]` and `⊥T/[T]` for the family member `n`.
fn family_quotients(n: usize) -> Result<(Universe<Q>, SubcatSpec, SubcatSpec, LinCat<Q>, LinCat<Q>)> {
    let a = two_cycle_family::<Q>(n)?;
    let u = Universe::of(&a)?;
    let t = t_of(&u, n)?;
    let perp = cotilting_check(&u, &t, CUTOFF)?.perp;
    let tm = u.members(&t);
    let abar = LinCat::new("mod", u.modules().to_vec())?.quotient_by_modules(&tm)?;
    let xbar = LinCat::new("perp", u.members(&perp))?.quotient_by_modules(&tm)?;
    Ok((u, t, perp, abar, xbar))
}

/// `dim Ext^1(M, N)` from `0 -> ΩM -> P -> M -> 0` and Hom dimensions only.
fn ext1_by_hom<F: Field>(m: &Module<F>, n: &Module<F>) -> Result<usize> {
    let cover = projective_cover(m)?;
    let omega = cover.map.kernel()?;
    let h = |x: &Module<F>| hom_basis(x, n).map(|s| s.dim());
    Ok(h(omega.source())? + h(m)? - h(cover.map.source())?)
}

/// gd computed on the opposite category algebra: the max pd of its simples.
fn gd_from_opposite(cat: &LinCat<Q>) -> Result<HomDim> {
    let op = CategoryAlgebra::new(cat)?.gamma.opposite();
    let mut gd = HomDim::Finite(0);
    for v in 0..op.num_vertices() {
        gd = gd.max(projective_dimension(&Module::simple(&op, v), CUTOFF)?);
    }
    Ok(gd)
}

fn i3_parts(out: &mut Outcome, r: &FamilyReport) {
    let n = r.n;
    let i3 = r.i3.as_ref().expect("n >= 2 has an I3 report");
    out.part("I3 terms equal the displayed sequence", i3.literal_match, format!("computed {}", i3.prefix.join(",")));
    out.part(
        "I3 terms equal the display after one inserted term",
        i3.match_with_inserted_term && i3.inserted_term.as_deref() == Some("[1]_2"),
        format!("inserted {:?}, display {}", i3.inserted_term, i3.displayed.join(",")),
    );
    let big = format!("[1]_{}", 2 * n + 1);
    let small = format!("[1]_{}", 2 * n - 1);
    let tail_roles = i3.prefix.len() == 9 && i3.prefix[4] == big && i3.prefix[5] == small && i3.prefix[6] == big;
    out.part("P_{2n+1}/P_{2n-1} alternate in the tail", tail_roles, format!("{big}/{small}"));
    out.part("Ω^2 I3 ≅ Ω^8 I3", i3.iso_2_8, format!("iso_2_8 = {}", i3.iso_2_8));
    out.part("Ω^3 I3 ≅ Ω^9 I3 and pd I3 infinite", i3.iso_3_9 && i3.pd == HomDim::Infinite, format!("period {:?}", i3.period));
    for q in [&r.mod_bar, &r.perp_bar] {
        let w = q.ig_witness.as_ref().and_then(|w| w.period.map(|p| (w.object.clone(), p)));
        out.part(
            &format!("{} is not Iwanaga-Gorenstein, with a recurrence witness", q.name),
            q.ig == Some(false) && w.is_some(),
            format!("witness {w:?}"),
        );
    }
}

fn c01() -> Result<Outcome> {
    let mut out = Outcome::default();
    let r = family_report::<Q>(2, CUTOFF)?;
    let cot = r.pipeline.stage("cotilting").expect("cotilting stage runs first");
    out.part("T = [1]_1 ⊕ [1]_6 cotilting with id 1", cot.passed() && cot.params.contains(&("id_T".into(), 1)), "");
    let expected: Vec<String> = (1..=6).map(|l| format!("[1]_{l}")).collect();
    out.part("⊥T = {[1]_l : l <= 6}", r.pipeline.perp == expected, r.pipeline.perp.join(","));
    // Ext^1 by the Hom-dimension formula; Ext^{>1}(-, T) = 0 since id T = 1.
    let a = two_cycle_family::<Q>(2)?;
    let u = Universe::of(&a)?;
    let tm = u.members(&t_of(&u, 2)?);
    let mut brute = Vec::new();
    for m in u.modules() {
        let mut zero = true;
        for t in &tm {
            zero &= ext1_by_hom(m, t)? == 0;
        }
        if zero {
            brute.push(m.name());
        }
    }
    out.part("⊥T agrees with the Ext^1 brute force", brute == expected, brute.join(","));
    i3_parts(&mut out, &r);
    Ok(out)
}

fn c02() -> Result<Outcome> {
    let mut out = Outcome::default();
    let r = family_report::<Q>(1, CUTOFF)?;
    let (_, _, _, abar, xbar) = family_quotients(1)?;
    for (s, cat, frozen) in [(&r.mod_bar, &abar, GD_MOD_BAR_N1), (&r.perp_bar, &xbar, GD_PERP_BAR_N1)] {
        let oracle = gd_from_opposite(cat)?;
        out.part(
            &format!("gd {} = {frozen}", s.name),
            s.gd == HomDim::Finite(frozen) && oracle == s.gd,
            format!("computed {}, opposite-side oracle {oracle}", s.gd),
        );
    }
    Ok(out)
}

fn c03() -> Result<Outcome> {
    let mut out = Outcome::default();
    let r = family_report::<Q>(3, CUTOFF)?;
    out.part("pipeline passes", r.pipeline.verdict == abcat::singeq::Verdict::Pass, r.pipeline.verdict.to_string());
    i3_parts(&mut out, &r);
    Ok(out)
}

fn c04() -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in [1, 2] {
        let (_, _, _, abar, xbar) = family_quotients(n)?;
        let c = restriction_pd_check(&abar, &xbar, CUTOFF, true)?;
        let all_zero = c.records().all(|r| r.dim == HomDim::Finite(0));
        out.part(
            &format!("n = {n}: every Ā(-, M)|X̄ is projective"),
            c.passed() && all_zero && c.records().count() == abar.len(),
            format!("{} objects", abar.len()),
        );
    }
    Ok(out)
}

/// `f = (φ, β): M0 ⊕ B_L -> L` with `φ` random and `β` a right `B`-approximation.
fn random_b_epi<R: Rng>(u: &Universe<Q>, b: &SubcatSpec, rng: &mut R) -> Result<Morphism<Q>> {
    let l = u.module(rng.gen_range(0..u.len())).clone();
    let m0 = u.module(rng.gen_range(0..u.len())).clone();
    let h = hom_basis(&m0, &l)?;
    let coeffs: Vec<Q> = (0..h.dim()).map(|_| Q::from_i64(rng.gen_range(-2..=2))).collect();
    let phi = if h.dim() == 0 { Morphism::zero(&m0, &l) } else { h.combination(&coeffs) };
    let beta = right_approx(u, b, &l, false)?.map;
    let sum = Module::direct_sum(u.algebra(), &[m0, beta.source().clone()])?;
    Ok(Morphism::from_columns(&sum.sum, &l, &[phi, beta]))
}

/// Universes and `B` for the randomized criteria: n = 1, 2 with `B = add T`,
/// and linear A3 with `B` the projectives.
fn random_instances() -> Result<Vec<(String, Universe<Q>, SubcatSpec)>> {
    let mut v = Vec::new();
    for n in [1, 2] {
        let u = Universe::of(&two_cycle_family::<Q>(n)?)?;
        let t = t_of(&u, n)?;
        v.push((format!("n={n}"), u, t));
    }
    let u = Universe::of(&nakayama::<Q>(&[3, 2, 1], Shape::Linear)?)?;
    let p = u.projectives()?;
    v.push(("A3".into(), u, p));
    Ok(v)
}

fn c05() -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut total = 0;
    for (name, u, b) in random_instances()? {
        let cat = LinCat::new("mod", u.modules().to_vec())?;
        let g = CategoryAlgebra::new(&cat)?;
        let mut ok = 0;
        for _ in 0..RANDOM_INSTANCES_PER_ALGEBRA {
            let f = random_b_epi(&u, &b, &mut rng)?;
            let p = vanishing_presentation(&u, &cat, &g, &b, &f, CUTOFF)?;
            let pd = p.minimal_pd.finite();
            if p.exact && p.length <= 2 && pd.is_some_and(|d| d <= p.length) {
                ok += 1;
            }
        }
        total += ok;
        out.part(&format!("{name}: exact, length <= 2, minimal pd <= length"), ok == RANDOM_INSTANCES_PER_ALGEBRA, format!("{ok} instances"));
    }
    out.part("at least 20 instances", total >= 20, format!("{total}"));
    Ok(out)
}

fn c06() -> Result<Outcome> {
    let mut out = Outcome::default();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut total = 0;
    for (name, u, b) in random_instances()? {
        let cat = LinCat::new("mod", u.modules().to_vec())?;
        let mut ok = 0;
        for _ in 0..RANDOM_INSTANCES_PER_ALGEBRA {
            let f = random_b_epi(&u, &b, &mut rng)?;
            let g = f.kernel()?;
            let r = relative_syzygy_resolution(&u, &cat, &b, &g, &f, 8)?;
            let direct = minimal_resolution(&r.gamma, &r.functor, CUTOFF)?;
            let same_f = match r.differentials.first() {
                Some(d1) => iso_test(d1.cokernel()?.target(), &r.functor.module)?.is_iso(),
                None => r.functor.module.is_zero(),
            };
            // A complete relative resolution bounds pd; infinite pd rules completion out.
            let bounded = match direct.projective_dimension() {
                HomDim::Finite(d) => !r.complete || d <= r.length(),
                HomDim::Infinite => !r.complete,
                HomDim::Unknown => false,
            };
            if r.is_exact() && same_f && bounded {
                ok += 1;
            } else if std::env::var_os("ABCAT_DEBUG").is_some() {
                eprintln!(
                    "{name}: {} -> {}: exact {} ({:?}, coker {}), same {same_f}, complete {}, len {}, pd {}",
                    f.source().name(), f.target().name(), r.is_exact(), r.homology, r.cokernel_matches, r.complete, r.length(), direct.projective_dimension()
                );
            }
        }
        total += ok;
        out.part(&format!("{name}: exact, same functor, consistent with minimal pd"), ok == RANDOM_INSTANCES_PER_ALGEBRA, format!("{ok} instances"));
    }
    out.part("at least 20 instances", total >= 20, format!("{total}"));
    Ok(out)
}

fn c07() -> Result<Outcome> {
    let mut out = Outcome::default();
    let (u, t, perp, abar, xbar) = family_quotients(1)?;
    let hd = HomDimMatrix::new(u.modules())?;
    let tm = u.members(&t);
    for (cat, base) in [(&abar, &tm), (&xbar, &tm)] {
        let _ = &perp;
        let mut tested = 0;
        let mut failure = None;
        for i in 0..cat.len() {
            for j in 0..cat.len() {
                for k in 0..cat.hom_dim(i, j) {
                    let f = cat.hom(i, j).rep(k);
                    let wk = weak_kernel(cat, &f, base, u.modules(), &hd)?;
                    tested += 1;
                    if let Some(bad) = check_weak_kernel(cat, &f, &wk)? {
                        failure.get_or_insert(format!("({i},{j}) #{k} fails at {bad:?}"));
                    }
                }
            }
        }
        out.part(
            &format!("{}: weak kernels factor every annihilated map", cat.name()),
            failure.is_none() && tested > 0,
            failure.unwrap_or(format!("{tested} basis morphisms")),
        );
    }
    Ok(out)
}

fn param(c: &abcat::singeq::Certificate, k: &str) -> Option<usize> {
    c.params.iter().find(|(n, _)| n == k).map(|(_, v)| *v)
}

fn c08() -> Result<Outcome> {
    let mut out = Outcome::default();
    let a4 = Universe::of(&nakayama::<Q>(&[4, 3, 2, 1], Shape::Linear)?)?;
    let dl = a4.injectives()?;
    let c = perp_quotient_bounds(&a4, &dl, CUTOFF)?;
    let (m, b) = (param(&c, "measured_gd"), param(&c, "gd_bound"));
    out.part("A4, T = DΛ: gd <= 3 gd Λ - 1", c.passed() && param(&c, "gd_Lambda") == Some(1) && m.zip(b).is_some_and(|(m, b)| m <= b), format!("measured {m:?}, bound {b:?}"));
    let (u, t, ..) = family_quotients(1)?;
    let c = perp_quotient_bounds(&u, &t, CUTOFF)?;
    let (_, _, _, _, xbar) = family_quotients(1)?;
    let measured = homological_report(&xbar, &CategoryAlgebra::new(&xbar)?, CUTOFF)?.gd;
    out.part(
        "n = 1: gd Λ infinite, so the bound holds vacuously; quotient gd finite",
        c.passed() && param(&c, "gd_bound").is_none() && measured.finite().is_some(),
        format!("measured gd {measured}"),
    );
    let s = stable_gd_check(&Universe::of(&nakayama::<Q>(&[2, 2, 1], Shape::Linear)?)?, CUTOFF)?;
    let (m, b) = (param(&s, "measured_gd"), param(&s, "gd_bound"));
    out.part("[2,2,1] (gd 2): stable gd <= 5", s.passed() && b == Some(5) && m.is_some_and(|m| m <= 5), format!("measured {m:?}"));
    Ok(out)
}

fn c09() -> Result<Outcome> {
    let mut out = Outcome::default();
    let u = Universe::of(&nakayama::<Q>(&[3, 3], Shape::Cyclic)?)?;
    let t = u.projectives()?;
    let c = perp_quotient_bounds(&u, &t, CUTOFF)?;
    out.part(
        "bound 3 max(pd T, id Λ) = 0 and measured id 0",
        c.passed() && param(&c, "id_bound") == Some(0) && param(&c, "measured_id") == Some(0),
        format!("{:?}", c.params),
    );
    let stable = LinCat::new("mod", u.modules().to_vec())?.quotient_by_modules(&u.members(&t))?;
    let g = CategoryAlgebra::new(&stable)?;
    let labels = stable.labels();
    let mut matched = 0;
    for x in 0..stable.len() {
        let p = representable(&stable, &g, x)?;
        for (y, l) in labels.iter().enumerate() {
            if iso_test(&p.module, &injective_functor(&g, l, y).module)?.is_iso() {
                matched += 1;
                break;
            }
        }
    }
    out.part("every projective functor is isomorphic to an injective one", matched == stable.len(), format!("{matched}/{}", stable.len()));
    Ok(out)
}

fn c10() -> Result<Outcome> {
    let mut out = Outcome::default();
    for (n, pairs) in [(1, 49), (2, 121)] {
        let c = ar_duality_check(&Universe::of(&two_cycle_family::<Q>(n)?)?)?;
        out.part(&format!("n = {n}: Ext^1 = stable = costable"), c.passed() && param(&c, "pairs") == Some(pairs), format!("{pairs} pairs"));
    }
    Ok(out)
}

/// Uniserial representations `v_0 -> v_1 -> ...` starting at every vertex,
/// of every length up to one past the longest projective; paths act by
/// products of arrow matrices and the module axioms reject the rest.
fn uniserial_brute_force(a: &Algebra<Q>, max_len: usize) -> Vec<Module<Q>> {
    let v = a.num_vertices();
    let arrow_index = |k: usize| a.labels().iter().position(|l| *l == format!("a{}", k + 1));
    let mut found = Vec::new();
    for top in 0..v {
        for len in 1..=max_len {
            let vertex = |l: usize| (top + l) % v;
            let mut dims = vec![0; v];
            let mut slot = Vec::with_capacity(len);
            for l in 0..len {
                slot.push(dims[vertex(l)]);
                dims[vertex(l)] += 1;
            }
            let arrow = |k: usize| {
                let mut m = Mat::zeros(dims[(k + 1) % v], dims[k]);
                for l in 0..len.saturating_sub(1) {
                    if vertex(l) == k {
                        m.set(slot[l + 1], slot[l], Q::one());
                    }
                }
                m
            };
            let action: Vec<Mat<Q>> = a
                .labels()
                .iter()
                .map(|label| match label.strip_prefix('e') {
                    Some(i) => {
                        let i: usize = i.parse::<usize>().unwrap() - 1;
                        Mat::identity(dims[i])
                    }
                    None => label
                        .split('a')
                        .filter(|s| !s.is_empty())
                        .map(|k| k.parse::<usize>().unwrap() - 1)
                        .fold(None::<Mat<Q>>, |acc, k| {
                            debug_assert!(arrow_index(k).is_some());
                            Some(match acc {
                                None => arrow(k),
                                Some(m) => arrow(k).mul(&m),
                            })
                        })
                        .unwrap(),
                })
                .collect();
            if let Ok(m) = Module::new(a, dims, action) {
                found.push(m);
            }
        }
    }
    found
}

fn c11() -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in 1..=3 {
        let a = two_cycle_family::<Q>(n)?;
        let listed = enumerate_indecomposables(&a)?;
        let brute = uniserial_brute_force(&a, 2 * n + 3);
        let mut matched = 0;
        for m in &brute {
            let hits = listed.iter().filter(|x| iso_test(x, m).map(|v| v.is_iso()).unwrap_or(false)).count();
            matched += usize::from(hits == 1);
        }
        out.part(
            &format!("n = {n}: {} uniserials, bijective with [m]_l", 4 * n + 3),
            brute.len() == 4 * n + 3 && listed.len() == 4 * n + 3 && matched == brute.len(),
            format!("brute force {}, listed {}", brute.len(), listed.len()),
        );
    }
    Ok(out)
}

fn family_json(n: usize, threads: usize) -> Result<String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().expect("thread pool");
    pool.install(|| {
        let r = family_report::<Q>(n, CUTOFF)?;
        Ok(Report::new("family-report", "Q", Some(r.verdict), &r).to_json())
    })
}

fn c12() -> Result<Outcome> {
    let mut out = Outcome::default();
    for n in [1, 2] {
        let a = family_json(n, 1)?;
        let b = family_json(n, 4)?;
        out.part(&format!("n = {n}: 1 and 4 threads give identical JSON"), a == b, format!("{} bytes", a.len()));
    }
    Ok(out)
}

fn main() {
    let criteria: [(&str, &str, Check); 12] = [
        ("C01", "family n = 2 reproduction", c01),
        ("C02", "family n = 1 finite gd", c02),
        ("C03", "family n = 3 pattern", c03),
        ("C04", "restrictions are projective", c04),
        ("C05", "vanishing functors have pd <= 2", c05),
        ("C06", "relative syzygy vs minimal resolution", c06),
        ("C07", "weak kernel universal property", c07),
        ("C08", "gd bounds", c08),
        ("C09", "self-injective degenerate bound", c09),
        ("C10", "Auslander-Reiten duality", c10),
        ("C11", "enumeration oracle", c11),
        ("C12", "determinism", c12),
    ];
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let start = Instant::now();
        let out = check().unwrap_or_else(|e| {
            let mut o = Outcome::default();
            o.part("runs without error", false, e.to_string());
            o
        });
        let pass = out.parts.iter().all(|p| p.1);
        println!("{id} {} {name} ({:.1}s)", if pass { "PASS" } else { "FAIL" }, start.elapsed().as_secs_f64());
        for (part, ok, detail) in &out.parts {
            let known = KNOWN_RED.contains(&(id, part.as_str()));
            let tag = match (ok, known) {
                (true, false) => "ok",
                (false, true) => "known-red",
                _ => {
                    unexpected.push(format!("{id}: {part}"));
                    if *ok {
                        "unexpected-pass"
                    } else {
                        "FAIL"
                    }
                }
            };
            println!("    [{tag}] {part}{}", if detail.is_empty() { String::new() } else { format!(": {detail}") });
        }
    }
    for (id, part) in KNOWN_RED {
        println!("known red {id}: {part}");
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
