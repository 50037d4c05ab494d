use abcat::ab::{cotilting_check, perp, SubcatSpec, Universe};
use abcat::algebra::ar::{ar_quiver_of, Quiver};
use abcat::algebra::homological::{ext_dim, injective_dimension, projective_dimension, HomDim};
use abcat::algebra::Algebra;
use abcat::io::emit_dot;
use abcat::lincat::functor::{
    ext1_functor, injective_functor, representable, restricted_representable, simple_functor, FunctorModule,
};
use abcat::lincat::resolution::{minimal_resolution, resolution_prefix, DimRecord};
use abcat::lincat::{CategoryAlgebra, LinCat};
use abcat::linalg::Field;
use abcat::singeq::{
    ab_conditions_certificate, ar_duality_check, family_report, injectives_as_ext_check, perp_quotient_bounds,
    quotient_summary, singular_equivalence_certificate, stable_gd_check, Certificate, Verdict,
};
use abcat::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::json;

use crate::table;
use crate::{CategoryArgs, Cli, Command, Outcome};

fn value<T: Serialize>(t: &T) -> serde_json::Value {
    serde_json::to_value(t).expect("payloads serialize")
}

fn split_labels(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|l| !l.is_empty()).collect()
}

fn subcat<F: Field>(u: &Universe<F>, name: &str, labels: &str) -> Result<SubcatSpec> {
    let ls = split_labels(labels);
    if ls.is_empty() {
        return Err(Error::Input(format!("{name}: empty label list")));
    }
    SubcatSpec::from_labels(name, u, &ls)
}

fn certificate(command: &'static str, c: Certificate) -> Outcome {
    Outcome { command, text: c.render(), verdict: Some(c.verdict), payload: value(&c) }
}

/// `⊥T` tested up to `id T`; the flag reports whether that degree was finite.
fn perp_complete<F: Field>(u: &Universe<F>, t: &SubcatSpec, cutoff: usize) -> Result<(SubcatSpec, HomDim)> {
    let mut id = HomDim::Finite(0);
    for m in u.members(t) {
        id = id.max(injective_dimension(&m, cutoff)?);
    }
    let bound = id.finite().map_or(cutoff, |d| d.max(1));
    Ok((perp(u, t, bound)?, id))
}

fn category<F: Field>(u: &Universe<F>, args: &CategoryArgs, cutoff: usize) -> Result<LinCat<F>> {
    let all = LinCat::new("mod", u.modules().to_vec())?;
    match (&args.by, &args.perp) {
        (Some(by), _) => all.quotient_by_modules(&u.members(&subcat(u, "by", by)?)),
        (None, Some(t)) => {
            let t = subcat(u, "T", t)?;
            let (p, id) = perp_complete(u, &t, cutoff)?;
            if id.finite().is_none() {
                return Err(Error::Input(format!("id T is {id}, so ⊥T cannot be decided from finitely many Ext groups")));
            }
            LinCat::new("perp", u.members(&p))?.quotient_by_modules(&u.members(&t))
        }
        (None, None) => Ok(all),
    }
}

fn quiver_text(q: &Quiver) -> String {
    let mut s = format!("vertices: {}\n", q.vertices.join(", "));
    for &(a, b, m) in &q.arrows {
        let mult = if m > 1 { format!(" (x{m})") } else { String::new() };
        s.push_str(&format!("{} -> {}{mult}\n", q.vertices[a], q.vertices[b]));
    }
    for &(m, t) in &q.mesh {
        s.push_str(&format!("tau {} = {}\n", q.vertices[m], q.vertices[t]));
    }
    s
}

fn functor<F: Field>(
    u: &Universe<F>,
    cat: &LinCat<F>,
    g: &CategoryAlgebra<F>,
    desc: &str,
) -> Result<FunctorModule<F>> {
    let (kind, label) = desc
        .split_once(':')
        .ok_or_else(|| Error::Input(format!("functor {desc:?} is not of the form kind:label")))?;
    let object = || {
        cat.index_of(label)
            .ok_or_else(|| Error::Input(format!("{label} is not a nonzero object of {}", cat.name())))
    };
    let module = || {
        u.index_of(label)
            .map(|i| u.module(i).clone())
            .ok_or_else(|| Error::Input(format!("{label} is not an indecomposable of the algebra")))
    };
    match kind {
        "rep" => representable(cat, g, object()?),
        "simple" => Ok(simple_functor(g, label, object()?)),
        "injective" => Ok(injective_functor(g, label, object()?)),
        "ext1" => ext1_functor(cat, g, &module()?),
        "restricted" => restricted_representable(cat, g, &module()?),
        other => Err(Error::Input(format!(
            "unknown functor kind {other:?}; expected rep, simple, injective, ext1 or restricted"
        ))),
    }
}

fn record_text(r: &DimRecord) -> String {
    let mut s = format!("pd {} = {}", r.object, r.dim);
    if let Some((i, j)) = r.period {
        s.push_str(&format!("  (syzygies {i} and {j} are isomorphic)"));
    }
    s.push('\n');
    for (i, t) in r.terms.iter().enumerate() {
        s.push_str(&format!("P{i}: {}\n", if t.is_empty() { "0".into() } else { t.join(" ⊕ ") }));
    }
    s
}

fn family_parameter<F: Field>(a: &Algebra<F>) -> Option<usize> {
    let s = a.nakayama_shape()?;
    match s.kupisch.as_slice() {
        &[c1, c2] if s.cyclic && c1 % 2 == 1 && c1 >= 3 && c2 == c1 + 1 => Some((c1 - 1) / 2),
        _ => None,
    }
}

pub fn dispatch<F: Field>(cli: &Cli, a: &Algebra<F>) -> Result<Outcome> {
    let cutoff = cli.cutoff;
    if cutoff == 0 {
        return Err(Error::Input("--cutoff must be at least 1".into()));
    }
    if let Command::FamilyReport { n } = &cli.command {
        let n = match (n, family_parameter(a)) {
            (Some(n), Some(m)) if *n != m => {
                return Err(Error::Input(format!("--n {n} does not match the spec, which is the family member n = {m}")))
            }
            (Some(n), _) => *n,
            (None, Some(m)) => m,
            (None, None) => {
                return Err(Error::Input("the spec is not cyclic Nakayama with Kupisch [2n+1, 2n+2]; pass --n".into()))
            }
        };
        let r = family_report::<F>(n, cutoff)?;
        return Ok(Outcome { command: "family-report", text: r.render(), verdict: Some(r.verdict), payload: value(&r) });
    }
    let u = Universe::of(a)?;
    let labels = u.labels();
    Ok(match &cli.command {
        Command::Indec => {
            let rows = u
                .modules()
                .par_iter()
                .map(|m| Ok((m.name(), m.dims().to_vec(), projective_dimension(m, cutoff)?, injective_dimension(m, cutoff)?)))
                .collect::<Result<Vec<_>>>()?;
            let header: Vec<String> = ["module", "dims", "dim", "pd", "id"].map(String::from).to_vec();
            let body: Vec<Vec<String>> = rows
                .iter()
                .map(|(l, d, pd, id)| {
                    let dv: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                    vec![l.clone(), format!("[{}]", dv.join(",")), d.iter().sum::<usize>().to_string(), pd.to_string(), id.to_string()]
                })
                .collect();
            let payload = rows
                .iter()
                .map(|(l, d, pd, id)| json!({"label": l, "dims": d, "dim": d.iter().sum::<usize>(), "pd": pd, "id": id}))
                .collect::<Vec<_>>();
            Outcome { command: "indec", text: table::render(&header, &body), verdict: None, payload: json!(payload) }
        }
        Command::Hom { cat } => {
            let c = category(&u, cat, cutoff)?;
            let l = c.labels();
            let m: Vec<Vec<usize>> = (0..c.len()).map(|i| (0..c.len()).map(|j| c.hom_dim(i, j)).collect()).collect();
            let text = format!("category {}; entry (row X, column Y) = dim Hom(X, Y)\n{}", c.name(), table::matrix("", &l, &m));
            Outcome { command: "hom", text, verdict: None, payload: json!({"category": c.name(), "objects": l, "hom_dims": m}) }
        }
        Command::Ext { degree } => {
            if *degree == 0 {
                return Err(Error::Input("--degree must be at least 1".into()));
            }
            let mods = u.modules();
            let m = mods
                .par_iter()
                .map(|x| mods.iter().map(|y| ext_dim(*degree, x, y)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let text = format!("entry (row M, column N) = dim Ext^{degree}(M, N)\n{}", table::matrix("", &labels, &m));
            Outcome { command: "ext", text, verdict: None, payload: json!({"degree": degree, "objects": labels, "ext_dims": m}) }
        }
        Command::ArQuiver { dot, cat } => {
            let (q, name) = if cat.by.is_none() && cat.perp.is_none() {
                (ar_quiver_of(u.modules())?, "ar".to_string())
            } else {
                let c = category(&u, cat, cutoff)?;
                let mut q = CategoryAlgebra::new(&c)?.quiver();
                q.vertices = c.labels();
                (q, c.name().to_string())
            };
            if let Some(p) = dot {
                std::fs::write(p, emit_dot(&q, &name)).map_err(|e| Error::Input(format!("cannot write {}: {e}", p.display())))?;
            }
            Outcome { command: "ar-quiver", text: quiver_text(&q), verdict: None, payload: value(&q) }
        }
        Command::Cotilting { t } => {
            let t = subcat(&u, "T", t)?;
            let r = cotilting_check(&u, &t, cutoff)?;
            let verdict = match (r.id_bound, r.is_cotilting()) {
                (HomDim::Unknown, _) => Verdict::Inconclusive,
                (_, ok) => Verdict::from_bool(ok),
            };
            let name = |i: &usize| u.module(*i).name();
            let mut text = format!("T = {}\n", t.labels(&u).join(" ⊕ "));
            for (l, d) in &r.ids {
                text.push_str(&format!("id {l} = {d}\n"));
            }
            text.push_str(&format!("id T = {}\n⊥T = {}\n", r.id_bound, r.perp.labels(&u).join(", ")));
            for c in &r.coresolutions {
                let mid: Vec<String> = c.middle.iter().map(name).collect();
                let cok: Vec<String> = c.cokernel.iter().map(name).collect();
                text.push_str(&format!(
                    "0 -> {} -> {} -> {} -> 0{}\n",
                    c.module,
                    if mid.is_empty() { "0".into() } else { mid.join(" ⊕ ") },
                    if cok.is_empty() { "0".into() } else { cok.join(" ⊕ ") },
                    if c.mono && c.cokernel_in_perp { "" } else { "  (fails)" }
                ));
            }
            if let Some(why) = r.first_failure() {
                text.push_str(&format!("not cotilting: {why}\n"));
            }
            text.push_str(&format!("verdict: {verdict}\n"));
            let payload = json!({
                "t": t.labels(&u),
                "ids": r.ids,
                "id_bound": r.id_bound,
                "ext_violation": r.ext_violation,
                "perp": r.perp.labels(&u),
                "coresolutions": r.coresolutions.iter().map(|c| json!({
                    "module": c.module,
                    "middle": c.middle.iter().map(name).collect::<Vec<_>>(),
                    "cokernel": c.cokernel.iter().map(name).collect::<Vec<_>>(),
                    "mono": c.mono,
                    "cokernel_in_perp": c.cokernel_in_perp,
                })).collect::<Vec<_>>(),
            });
            Outcome { command: "cotilting", text, verdict: Some(verdict), payload }
        }
        Command::Perp { t } => {
            let t = subcat(&u, "T", t)?;
            let (p, id) = perp_complete(&u, &t, cutoff)?;
            let members = p.labels(&u);
            let mut text = format!("⊥T = {}\n", members.join(", "));
            let verdict = if id.finite().is_some() {
                None
            } else {
                text.push_str(&format!("id T is {id}: Ext tested only up to degree {cutoff}\n"));
                Some(Verdict::Inconclusive)
            };
            Outcome { command: "perp", text, verdict, payload: json!({"t": t.labels(&u), "id_t": id, "perp": members}) }
        }
        Command::Quotient { cat } => {
            let c = category(&u, cat, cutoff)?;
            let s = quotient_summary(&c, cutoff)?;
            let mut text = format!("category {} with {} objects\n", s.name, s.objects.len());
            text.push_str(&table::matrix("Hom", &s.objects, &s.hom_dims));
            for (x, y, m) in &s.arrows {
                text.push_str(&format!("irreducible {x} -> {y} (x{m})\n"));
            }
            let ig = match s.ig {
                Some(true) => "yes",
                Some(false) => "no",
                None => "undecided",
            };
            text.push_str(&format!("gd = {}\nIwanaga-Gorenstein: {ig}\n", s.gd));
            if let Some(w) = &s.ig_witness {
                text.push_str(&format!("witness: {}", record_text(w)));
            }
            Outcome { command: "quotient", text, verdict: None, payload: value(&s) }
        }
        Command::Resolve { functor: desc, prefix, cat } => {
            let c = category(&u, cat, cutoff)?;
            if c.is_empty() {
                return Err(Error::Input(format!("{} has no nonzero objects", c.name())));
            }
            let g = CategoryAlgebra::new(&c)?;
            let f = functor(&u, &c, &g, desc)?;
            let trace = match prefix {
                Some(k) => resolution_prefix(&g, &f, *k)?,
                None => minimal_resolution(&g, &f, cutoff)?,
            };
            let r = DimRecord::new(f.provenance.to_string(), &trace);
            let dims = f.module.dims().to_vec();
            let text = format!("category {}\ndimension vector {:?}\n{}", c.name(), dims, record_text(&r));
            let verdict = (prefix.is_none() && r.dim == HomDim::Unknown).then_some(Verdict::Inconclusive);
            Outcome {
                command: "resolve",
                text,
                verdict,
                payload: json!({"category": c.name(), "objects": c.labels(), "dims": dims, "resolution": r}),
            }
        }
        Command::CheckAb { x, omega } => {
            let x = subcat(&u, "X", x)?;
            let omega = subcat(&u, "omega", omega)?;
            certificate("check-ab", ab_conditions_certificate(&u, &x, &omega, cutoff)?)
        }
        Command::Singeq { t } => {
            let b = singular_equivalence_certificate(&u, &subcat(&u, "T", t)?, cutoff)?;
            Outcome { command: "singeq", text: b.render(), verdict: Some(b.verdict), payload: value(&b) }
        }
        Command::Bounds { t, stable } => match (t, stable) {
            (_, true) => certificate("bounds", stable_gd_check(&u, cutoff)?),
            (Some(t), false) => certificate("bounds", perp_quotient_bounds(&u, &subcat(&u, "T", t)?, cutoff)?),
            (None, false) => return Err(Error::Input("bounds needs --T or --stable".into())),
        },
        Command::ArDuality => certificate("ar-duality", ar_duality_check(&u)?),
        Command::InjectivesAsExt { t } => {
            certificate("injectives-as-ext", injectives_as_ext_check(&u, &subcat(&u, "T", t)?, cutoff)?)
        }
        Command::FamilyReport { .. } => unreachable!("handled above"),
    })
}
