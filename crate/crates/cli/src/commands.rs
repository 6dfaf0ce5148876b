use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use mfcat::algebra::{format_rational, is_regular_weight_system, milnor_number, RegularityWitness};
use mfcat::decompose::{ar_quiver, decompose, labels_of, random_object, Summand};
use mfcat::homalg::{hom, hom_dims_range, is_closed, m1, m2, verify_serre_duality, Morphism};
use mfcat::mfcore::{assemble_cone, serre, shift, translate, verify_mf, GradedMF, IndecompLabel};
use mfcat::quiverlat::{cartan_matrix_a, equivalence_report, euler_matrix, EulerData, EulerSource};
use mfcat::serial::{matrix_to_json, parse_mf};
use mfcat::stability::{check_bridgeland, hn_filtration, AxiomResult, BridgelandConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::{Command, QuiverCommand, Source, StabilityCommand, WeightsCommand};

pub type Outcome = (Value, bool);

pub fn run(cmd: &Command) -> Result<Outcome> {
    let (name, (mut value, ok)) = match cmd {
        Command::Verify { file } => ("verify", verify(&load(file)?)),
        Command::Hom {
            source,
            target,
            degree,
            table,
            window,
        } => {
            let (a, b) = (load_univariate(source)?, load_univariate(target)?);
            let out = if *table {
                hom_table(&a, &b, window.unwrap_or(1))?
            } else {
                hom_degree(&a, &b, *degree)?
            };
            ("hom", out)
        }
        Command::Decompose { file, certificate } => {
            ("decompose", decomposition(&load_univariate(file)?, *certificate)?)
        }
        Command::Ar { h, window } => ("ar", ar(check_h(*h)?, *window)?),
        Command::Euler { h, source } => ("euler", euler(check_h(*h)?, *source)?),
        Command::Serre { h, range } => ("serre", serre_report(check_h(*h)?, *range)?),
        Command::Stability(StabilityCommand::Hn { file }) => ("stability hn", hn(&load_univariate(file)?)?),
        Command::Stability(StabilityCommand::Check {
            h,
            window,
            seed,
            corpus,
        }) => {
            let mut cfg = BridgelandConfig::new(check_h(*h)?, *window);
            cfg.seed = *seed;
            cfg.corpus = *corpus;
            ("stability check", stability_check(&cfg)?)
        }
        Command::Quiver(QuiverCommand::Compare { h }) => ("quiver compare", quiver_compare(check_h(*h)?)?),
        Command::Weights(WeightsCommand::Check { a, b, c, h }) => ("weights check", weights(*a, *b, *c, *h)?),
        Command::Report { h, output, seed } => ("report", report(check_h(*h)?, output, *seed)?),
        Command::Selftest { max_h, seed } => ("selftest", selftest(check_h(*max_h)?, *seed)?),
    };
    if let Value::Object(map) = &mut value {
        map.insert("schema".into(), json!(1));
        map.insert("command".into(), json!(name));
        map.insert("ok".into(), json!(ok));
    }
    Ok((value, ok))
}

fn check_h(h: u32) -> Result<u32> {
    if h < 2 {
        bail!("h must be at least 2, got {h}");
    }
    Ok(h)
}

fn load(path: &Path) -> Result<GradedMF> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_mf(&text).with_context(|| format!("parsing {}", path.display()))
}

fn load_univariate(path: &Path) -> Result<GradedMF> {
    let m = load(path)?;
    if !m.is_univariate() {
        bail!(
            "{}: this command needs a one-variable object with f = x^h; Hom spaces and decompositions are only computed there",
            path.display()
        );
    }
    Ok(m)
}

fn label(l: &IndecompLabel) -> Value {
    json!([l.l, l.i])
}

fn labels(ls: &[IndecompLabel]) -> Value {
    Value::Array(ls.iter().map(label).collect())
}

fn axiom(a: &AxiomResult) -> Value {
    json!({ "checked": a.checked, "failures": a.failures, "ok": a.ok() })
}

fn verify(m: &GradedMF) -> Outcome {
    let rep = verify_mf(m);
    let failures: Vec<String> = rep
        .homogeneity_failures
        .iter()
        .map(|f| format!("{f:?}"))
        .collect();
    (
        json!({
            "square": rep.square,
            "potential_quasi_homogeneous": rep.potential_quasi_homogeneous,
            "maurer_cartan": rep.maurer_cartan_ok(),
            "entries_checked": rep.entries_checked,
            "homogeneity_failures": failures,
            "summary": rep.summary(),
        }),
        rep.ok(),
    )
}

fn morphism(phi: &Morphism) -> Value {
    json!({ "degree": phi.degree(), "matrix": matrix_to_json(&phi.to_matrix()) })
}

fn hom_degree(a: &GradedMF, b: &GradedMF, q: i64) -> Result<Outcome> {
    let r = hom(a, b, q)?;
    let reps: Vec<Value> = r.representatives.iter().map(morphism).collect();
    Ok((
        json!({
            "degree": r.degree,
            "dim": r.dim,
            "slots": r.slots,
            "cycles": r.cycles,
            "boundaries": r.boundaries,
            "representatives": reps,
        }),
        true,
    ))
}

fn hom_table(a: &GradedMF, b: &GradedMF, w: i64) -> Result<Outcome> {
    let dims = hom_dims_range(a, b, -w, w)?;
    let rows: Vec<Value> = dims
        .iter()
        .enumerate()
        .map(|(t, d)| json!({ "degree": t as i64 - w, "dim": d }))
        .collect();
    Ok((json!({ "window": w, "table": rows }), true))
}

fn decomposition(m: &GradedMF, with_certificate: bool) -> Result<Outcome> {
    let d = decompose(m)?;
    let cert_ok = d.verify_certificate(m)?;
    let summands: Vec<Value> = d
        .summands
        .iter()
        .map(|s| match s {
            Summand::Indecomposable(l) => json!({ "indecomposable": label(l) }),
            Summand::Trivial(kind, k) => json!({ "trivial": format!("{kind:?}"), "tag": k }),
        })
        .collect();
    let mut out = json!({
        "labels": labels(&d.labels),
        "stripped_trivial": d.stripped_trivial,
        "summands": summands,
        "certificate_ok": cert_ok,
    });
    if with_certificate {
        let c = &d.certificate;
        out["certificate"] = json!({
            "exponents": c.exponents,
            "even_order": c.even_order,
            "odd_order": c.odd_order,
            "r": matrix_to_json(&c.r),
            "r_inv": matrix_to_json(&c.r_inv),
            "c": matrix_to_json(&c.c),
            "c_inv": matrix_to_json(&c.c_inv),
        });
    }
    Ok((out, cert_ok))
}

fn ar(h: u32, window: i64) -> Result<Outcome> {
    let q = ar_quiver(h, window)?;
    let arrows: Vec<Value> = q
        .arrows()
        .map(|a| {
            json!({
                "kind": format!("{:?}", a.kind).to_lowercase(),
                "from": label(&a.from),
                "to": label(&a.to),
                "closed": a.closed,
                "nonzero": a.nonzero,
            })
        })
        .collect();
    Ok((
        json!({ "h": h, "window": window, "vertices": labels(&q.vertices), "arrows": arrows }),
        q.all_arrows_valid(),
    ))
}

fn euler_data(e: &EulerData) -> Value {
    json!({
        "a": e.a,
        "a_inv": e.a_inv,
        "det": e.det,
        "intersection": e.intersection,
        "coxeter": e.coxeter,
        "coxeter_power_h_is_identity": e.coxeter_order_divides_h(),
        "serre_on_k0": e.serre_on_k0(),
    })
}

fn euler(h: u32, source: Source) -> Result<Outcome> {
    let cartan = cartan_matrix_a(h as usize - 1);
    let mut out = json!({ "h": h, "cartan": cartan });
    let mut sides = Vec::new();
    if source != Source::Quiver {
        sides.push(("mf", euler_matrix(h, EulerSource::Mf)?));
    }
    if source != Source::Mf {
        sides.push(("quiver", euler_matrix(h, EulerSource::Quiver)?));
    }
    let mut ok = true;
    for (name, e) in &sides {
        out[*name] = euler_data(e);
        ok &= e.matches_cartan();
    }
    if let [(_, a), (_, b)] = sides.as_slice() {
        ok &= a.a == b.a;
    }
    out["verdict"] = json!(if ok { "match" } else { "mismatch" });
    Ok((out, ok))
}

fn serre_report(h: u32, range: i64) -> Result<Outcome> {
    let rep = verify_serre_duality(h, range)?;
    let failures: Vec<Value> = rep
        .failures()
        .iter()
        .map(|c| {
            json!({
                "source": [c.source.0, c.source.1],
                "target": [c.target.0, c.target.1],
                "hom_dim": c.hom_dim,
                "dual_dim": c.dual_dim,
                "pairing_rank": c.pairing_rank,
            })
        })
        .collect();
    Ok((
        json!({
            "h": h,
            "range": range,
            "pairs": rep.cells.len(),
            "nonzero_pairs": rep.nonzero_pairs(),
            "failures": failures,
        }),
        rep.ok(),
    ))
}

fn hn(m: &GradedMF) -> Result<Outcome> {
    let f = hn_filtration(m)?;
    let steps: Vec<Value> = f
        .steps
        .iter()
        .map(|s| {
            json!({
                "phase": format_rational(&s.phase),
                "labels": labels(&s.labels),
                "semistable": s.piece_semistable,
                "cone_matches": s.cone_matches,
            })
        })
        .collect();
    Ok((
        json!({
            "filtration": steps,
            "phases_decreasing": f.phases_decreasing(),
            "certificate_ok": f.certificate_ok,
            "reassembly_ok": f.reassembly_ok,
        }),
        f.verify(),
    ))
}

fn stability_check(cfg: &BridgelandConfig) -> Result<Outcome> {
    let r = check_bridgeland(cfg)?;
    Ok((
        json!({
            "h": cfg.h,
            "window": cfg.i_window,
            "seed": cfg.seed,
            "corpus": cfg.corpus,
            "polar_form": axiom(&r.polar_form),
            "shift_phase": axiom(&r.shift_phase),
            "hom_vanishing": axiom(&r.hom_vanishing),
            "hn_filtrations": axiom(&r.hn_filtrations),
        }),
        r.ok(),
    ))
}

fn quiver_compare(h: u32) -> Result<Outcome> {
    let r = equivalence_report(h)?;
    let ident: Vec<Value> = r
        .identification
        .iter()
        .map(|(k, iv)| json!({ "mf": [k, 0], "projective": [iv.p, iv.q] }))
        .collect();
    Ok((
        json!({
            "h": h,
            "identification": ident,
            "hom_tables": { "mf": r.mf_hom_table, "quiver": r.quiver_hom_table, "match": r.hom_tables_match },
            "higher_vanishing": { "mf": r.mf_higher_vanish, "quiver": r.quiver_higher_vanish },
            "indecomposables_mod_2": { "mf": r.mf_count, "quiver": r.quiver_count, "match": r.counts_match() },
            "euler": { "mf": r.mf_euler.a, "quiver": r.quiver_euler.a, "match": r.euler_match() },
        }),
        r.ok(),
    ))
}

fn weights(a: u32, b: u32, c: u32, h: u32) -> Result<Outcome> {
    let v = is_regular_weight_system(a, b, c, h)?;
    let mut out = json!({ "a": a, "b": b, "c": c, "h": h, "regular": v.regular });
    match &v.witness {
        RegularityWitness::Polynomial(p) => {
            let coeffs: Vec<String> = (0..=p.degree().unwrap_or(0))
                .map(|e| format_rational(&p.coefficient(&[e])))
                .collect();
            out["chi"] = json!(coeffs);
            out["milnor_number"] = json!(format_rational(&milnor_number(a, b, c, h)?));
        }
        RegularityWitness::Pole { root_order } => out["pole_root_order"] = json!(root_order),
    }
    Ok((out, true))
}

fn report(h: u32, path: &Path, seed: u64) -> Result<Outcome> {
    let mut cfg = BridgelandConfig::new(h, 2);
    cfg.seed = seed;
    let sections = [
        ("euler", euler(h, Source::Both)?),
        ("quiver", quiver_compare(h)?),
        ("serre", serre_report(h, 2)?),
        ("ar", ar(h, 2)?),
        ("stability", stability_check(&cfg)?),
        ("selftest", selftest_for(h, h, seed)?),
    ];
    let ok = sections.iter().all(|(_, (_, ok))| *ok);
    let mut full = json!({ "schema": 1, "h": h, "seed": seed, "ok": ok });
    let mut verdicts = json!({});
    for (name, (v, pass)) in sections {
        full[name] = v;
        verdicts[name] = json!(pass);
    }
    let text = serde_json::to_string_pretty(&full)? + "\n";
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
    Ok((json!({ "h": h, "output": path.display().to_string(), "sections": verdicts }), ok))
}

fn selftest(max_h: u32, seed: u64) -> Result<Outcome> {
    selftest_for(2, max_h, seed)
}

/// Property checks on seeded random data: `m1^2 = 0`, Leibniz, cone
/// factorizes iff closed, functor relations, decomposition round trips.
fn selftest_for(min_h: u32, max_h: u32, seed: u64) -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    let mut all_ok = true;
    for h in min_h..=max_h {
        let mut counts = [0usize; 5];
        let mut fails = [0usize; 5];
        let obj = |rng: &mut ChaCha8Rng| -> Result<GradedMF> {
            let trivial = rng.gen_range(0..2);
            Ok(random_object(rng, h, 3, 2, trivial)?.0)
        };
        for _ in 0..40 {
            let (a, b, c) = (obj(&mut rng)?, obj(&mut rng)?, obj(&mut rng)?);
            let p = rng.gen_range(-3i64..=3);
            let q = rng.gen_range(-3i64..=3);
            let phi = Morphism::random(&a, &b, p, &mut rng)?;
            let psi = Morphism::random(&b, &c, q, &mut rng)?;
            counts[0] += 1;
            fails[0] += usize::from(!m1(&m1(&phi)?)?.is_zero());
            let lhs = m1(&m2(&psi, &phi)?)?;
            let minus = mfcat::algebra::int(-1);
            let rhs = m2(&m1(&psi)?, &phi)?
                .scale(&mfcat::algebra::sign_pow(p))
                .add(&m2(&psi, &m1(&phi)?)?.scale(&minus))?;
            counts[1] += 1;
            fails[1] += usize::from(lhs != rhs);
            let t = Morphism::random(&a, &b, 0, &mut rng)?;
            counts[2] += 1;
            fails[2] += usize::from(verify_mf(&assemble_cone(&t)?).ok() != is_closed(&t)?);
            let hh = h as i64;
            counts[3] += 1;
            fails[3] += usize::from(
                translate(&a, hh) != shift(&a, 2)
                    || shift(&shift(&a, 1), -1) != a
                    || labels_of(&(0..h).fold(a.clone(), |s, _| serre(&s)))?
                        != labels_of(&shift(&a, hh - 2))?,
            );
            let trivial = rng.gen_range(0..3);
            let (m, expected) = random_object(&mut rng, h, 6, hh, trivial)?;
            counts[4] += 1;
            fails[4] += usize::from(labels_of(&m)? != expected);
        }
        let names = ["m1_squared", "leibniz", "cone_closedness", "functors", "decompose_round_trip"];
        let mut row = json!({ "h": h });
        for (i, n) in names.iter().enumerate() {
            row[*n] = json!({ "checked": counts[i], "failures": fails[i] });
        }
        all_ok &= fails.iter().all(|&f| f == 0);
        rows.push(row);
    }
    Ok((json!({ "seed": seed, "results": rows }), all_ok))
}
