use std::fs;
use std::path::{Path, PathBuf};

use gbcode::betti::{self, betti_min, betti_numbers, check_theorem_62, direct_mins, IdealFile, SquarefreeIdeal};
use gbcode::codes::{CodeFile, LinearCode, Word};
use gbcode::counterexample::{
    build, example_seed, gap_statement, search_seed, verify_gb, verify_mechanism, verify_prop53_truncated,
    SEARCH_BUDGET,
};
use gbcode::d2::{analyze, Analysis, Status as D2Status};
use gbcode::examples::{ternary_8_2, ternary_9_3};
use gbcode::gf::{ElementRepr, FieldSpec};
use gbcode::groebner::{compute_mg, reduced_gb, reduced_gb_by_degree, GroebnerBasis};
use gbcode::orders::{check_block_dominance, check_minus_compatibility, Verdict};
use gbcode::{Error, Limits, Monomial, OrderKind};
use serde_json::{json, Value};

use crate::report::{Status, Verdicts};

/// Everything a command needs besides its own arguments.
pub struct Ctx {
    pub order: OrderKind,
    pub seed: u64,
    pub limits: Limits,
    /// Raw bytes of every input file, in the order read.
    pub inputs: Vec<Vec<u8>>,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Io(String),
    Input(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    pub fn kind(&self) -> String {
        match self {
            CliError::Core(e) => {
                let dbg = format!("{e:?}");
                dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or("Error").to_string()
            }
            CliError::Io(_) => "Io".into(),
            CliError::Input(_) => "Input".into(),
        }
    }
    pub fn message(&self) -> String {
        match self {
            CliError::Core(e) => e.to_string(),
            CliError::Io(m) | CliError::Input(m) => m.clone(),
        }
    }
}

pub type CliResult = Result<(Value, Verdicts), CliError>;

impl Ctx {
    fn read(&mut self, path: &Path) -> Result<Vec<u8>, CliError> {
        let bytes = fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        self.inputs.push(bytes.clone());
        Ok(bytes)
    }

    fn read_json<T: serde::de::DeserializeOwned>(&mut self, path: &Path) -> Result<T, CliError> {
        let bytes = self.read(path)?;
        serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }

    fn code(&mut self, path: &Path) -> Result<LinearCode, CliError> {
        let file: CodeFile = self.read_json(path)?;
        Ok(LinearCode::from_file(&file)?)
    }

    fn words(&mut self, path: &Path, f: &FieldSpec) -> Result<Vec<Word>, CliError> {
        let rows: Vec<Vec<ElementRepr>> = self.read_json(path)?;
        rows.iter()
            .map(|r| r.iter().map(|e| f.parse_element(e)).collect::<Result<Vec<u8>, Error>>().map(Word))
            .collect::<Result<_, _>>()
            .map_err(CliError::from)
    }
}

fn field_json(f: &FieldSpec) -> Value {
    json!({ "p": f.p(), "s": f.s(), "q": f.q(), "modulus": f.modulus(), "alpha": f.alpha() })
}

fn code_json(c: &LinearCode) -> Value {
    json!({ "field": field_json(c.field()), "n": c.n(), "k": c.k() })
}

fn order_status(v: &Verdict) -> Status {
    match v {
        Verdict::Violated { .. } => Status::Falsified,
        Verdict::SampledTrue { .. } => Status::Sampled,
        _ => Status::Verified,
    }
}

pub fn ghw(ctx: &mut Ctx, path: &Path, upto: Option<usize>) -> CliResult {
    let code = ctx.code(path)?;
    let upto = upto.unwrap_or(code.k());
    if upto < 1 || upto > code.k() {
        return Err(Error::BadIndex { i: upto, k: code.k() }.into());
    }
    let table = code.table(&ctx.limits)?;
    let d: Vec<usize> =
        (1..=upto).map(|i| table.ghw_with_witnesses(i, 0, &ctx.limits).map(|x| x.0)).collect::<Result<_, _>>()?;
    let mut v = Verdicts::default();
    v.check("strict monotonicity of d_i", d.windows(2).all(|w| w[0] < w[1]), None);
    Ok((json!({ "code": code_json(&code), "d": d }), v))
}

pub fn minimal_supports(ctx: &mut Ctx, path: &Path) -> CliResult {
    let code = ctx.code(path)?;
    let words = code.minimal_support_codewords(&ctx.limits)?;
    let supports = betti::supports(&words);
    let antichain = supports
        .iter()
        .enumerate()
        .all(|(a, s)| supports.iter().enumerate().all(|(b, t)| a == b || !s.iter().all(|x| t.contains(x))));
    let mut v = Verdicts::default();
    v.check("supports form an antichain", antichain, None);
    Ok((
        json!({
            "code": code_json(&code),
            "codewords": words.len(),
            "supports": supports,
            "min_weight": supports.iter().map(Vec::len).min(),
        }),
        v,
    ))
}

pub fn groebner(ctx: &mut Ctx, path: &Path, route: &str, elements: bool) -> CliResult {
    let code = ctx.code(path)?;
    let mut v = Verdicts::default();
    let gb = match route {
        "heap" => reduced_gb(&code, ctx.order, &ctx.limits)?,
        "degree" => reduced_gb_by_degree(&code, ctx.order, &ctx.limits)?,
        _ => {
            let a = reduced_gb(&code, ctx.order, &ctx.limits)?;
            let b = reduced_gb_by_degree(&code, ctx.order, &ctx.limits)?;
            let mut ea: Vec<_> = a.elements().to_vec();
            let mut eb: Vec<_> = b.elements().to_vec();
            ea.sort_by(|x, y| (x.lead.exps(), x.trail.exps()).cmp(&(y.lead.exps(), y.trail.exps())));
            eb.sort_by(|x, y| (x.lead.exps(), x.trail.exps()).cmp(&(y.lead.exps(), y.trail.exps())));
            v.check("traversal routes agree", ea == eb, None);
            a
        }
    };
    let violations: Vec<String> = gb.shape_violations().iter().map(|e| e.to_string()).collect();
    let shape_detail =
        (!violations.is_empty()).then(|| format!("{} elements with lead/trail weight gap above 1", violations.len()));
    v.check("lead/trail weight gap at most 1", violations.is_empty(), shape_detail);
    let export = gb.export();
    let mut results = json!({
        "code": code_json(&code),
        "order": ctx.order,
        "stats": export.stats,
        "shape_violations": violations,
    });
    if elements {
        results["elements"] = serde_json::to_value(&export.elements).unwrap();
    }
    Ok((results, v))
}

fn theorem46_status(r: &gbcode::d2::Theorem46) -> Status {
    match r.status {
        D2Status::Verified => Status::Verified,
        D2Status::Falsified => Status::Falsified,
        D2Status::Silent if r.hypothesis && matches!(r.order_condition, Verdict::SampledTrue { .. }) => Status::Sampled,
        D2Status::Silent => Status::Silent,
    }
}

pub fn d2test(ctx: &mut Ctx, path: &Path, set: Option<&PathBuf>) -> CliResult {
    let code = ctx.code(path)?;
    let report = analyze(&code, ctx.order, &ctx.limits, ctx.seed)?;
    let mut v = Verdicts::default();
    v.check(
        "pair invariants",
        report.invariant_failures.is_empty(),
        (!report.invariant_failures.is_empty()).then(|| report.invariant_failures.join("; ")),
    );
    v.check("intersection bound (q-1)/q", report.prop42.holds, None);
    v.push(
        "M_G is a d2-test set under the intersection hypothesis",
        theorem46_status(&report.theorem46),
        (!report.theorem46.failures.is_empty()).then(|| report.theorem46.failures.join("; ")),
    );
    let mut results = json!({ "code": code_json(&code), "order": ctx.order, "report": report });
    if let Some(p) = set {
        let words = ctx.words(p, code.field())?;
        let a = Analysis::new(&code, ctx.order, &ctx.limits)?;
        let hit = a.is_d2_test_set(&words)?;
        results["set"] = json!({ "size": words.len(), "is_d2_test_set": hit.is_some(), "witnesses": hit });
    }
    Ok((results, v))
}

pub struct BettiArgs<'a> {
    pub code: Option<&'a PathBuf>,
    pub ideal: Option<&'a PathBuf>,
    pub set: &'a str,
    pub full: bool,
    pub ell: u8,
}

pub fn betti_cmd(ctx: &mut Ctx, args: BettiArgs<'_>) -> CliResult {
    let mut v = Verdicts::default();
    let (ideal, analysis, words) = match (args.code, args.ideal) {
        (None, Some(p)) => {
            let file: IdealFile = ctx.read_json(p)?;
            (SquarefreeIdeal::from_file(&file)?, None, None)
        }
        (Some(p), None) => {
            let code = ctx.code(p)?;
            let a = Analysis::new(&code, ctx.order, &ctx.limits)?;
            let words = match args.set {
                "all" => code.minimal_support_codewords(&ctx.limits)?,
                "mg" => {
                    let gb = reduced_gb(&code, ctx.order, &ctx.limits)?;
                    compute_mg(&code, &gb, &ctx.limits)?
                }
                file => ctx.words(Path::new(file), code.field())?,
            };
            (SquarefreeIdeal::from_words(code.n(), &words)?, Some(a), Some(words))
        }
        _ => return Err(CliError::Input("exactly one of --code or --ideal is required".into())),
    };

    let mut results = json!({ "n": ideal.n(), "generators": ideal.generator_sets(), "char": args.ell });
    let b1 = betti_min(&ideal, 1, args.ell, &ctx.limits)?;
    let b2 = betti_min(&ideal, 2, args.ell, &ctx.limits)?;
    let mut mins = json!({ "beta1": b1, "beta2": b2 });
    if ideal.generators().len() >= 2 {
        let (a, b) = direct_mins(&ideal)?;
        mins["direct"] = json!([a, b]);
        v.check("Betti minima equal direct minima", b1 == Some(a) && b2 == Some(b), None);
    }
    if args.full {
        let table = betti_numbers(&ideal, args.ell, &ctx.limits)?;
        let ok = (1..=ideal.n())
            .all(|j| table.get(1, j) == ideal.generators().iter().filter(|g| g.count_ones() as usize == j).count());
        v.check("beta_1 counts generators by size", ok, None);
        results["betti"] = json!(table.triples());
        results["pd"] = json!(table.pd);
        if let Some(a) = &analysis {
            v.check("pd bounded by k", table.pd <= a.code.k(), None);
            if args.set == "all" {
                let mut ok = true;
                for i in 1..=a.code.k() {
                    ok &= table.min_j(i) == Some(a.code.ghw(i, &ctx.limits)?);
                }
                v.check("Betti minima equal generalized Hamming weights", ok, None);
            }
        }
    }
    if let (Some(a), Some(words)) = (&analysis, &words) {
        if args.set == "all" {
            v.check("beta1/beta2 minima equal d1/d2", b1 == Some(a.d1) && b2 == Some(a.d2), None);
        }
        if ideal.generators().len() >= 2 {
            let t = check_theorem_62(a, words, args.ell, &ctx.limits)?;
            v.check("Betti minima detect minimum weight and d2-test sets", t.holds, None);
            results["equivalences"] = serde_json::to_value(&t).unwrap();
        }
    }
    results["mins"] = mins;
    Ok((results, v))
}

pub struct CounterexampleArgs<'a> {
    pub q: u32,
    pub truncate: Option<usize>,
    pub verify: &'a str,
    pub search: Option<usize>,
}

pub fn counterexample(ctx: &mut Ctx, args: CounterexampleArgs<'_>) -> CliResult {
    let mut v = Verdicts::default();
    let seed = match args.search {
        None => example_seed(args.q, ctx.order, &ctx.limits)?,
        Some(m_max) => search_seed(args.q, m_max, ctx.order, SEARCH_BUDGET, ctx.seed)?
            .ok_or_else(|| CliError::Input(format!("no seed of length <= {m_max} found over GF({})", args.q)))?,
    };
    v.check("seed conditions", seed.failures().is_empty(), None);
    let ell = gbcode::counterexample::p_words(&seed).len();
    let full = match build(&seed, ell, &ctx.limits) {
        Ok(c) => Some(c),
        Err(e @ Error::TooLarge { .. }) => {
            v.push("full construction", Status::Silent, Some(format!("not materialized: {e}")));
            None
        }
        Err(e) => return Err(e.into()),
    };
    let cc = match (args.truncate, &full) {
        (Some(t), _) => build(&seed, t, &ctx.limits)?,
        (None, Some(c)) => c.clone(),
        (None, None) => build(&seed, ell.min(4), &ctx.limits)?,
    };
    let inv = cc.invariant_failures();
    v.check("construction invariants", inv.is_empty(), (!inv.is_empty()).then(|| inv.join("; ")));
    // without the full code the lead pillar covers only the built blocks
    let mech = verify_mechanism(full.as_ref().unwrap_or(&cc), &ctx.limits);
    v.check("leading monomials of the appended generators", mech.leads.holds, mech.leads.witness.clone());
    v.check("completeness of P", mech.p_complete.holds, mech.p_complete.witness.clone());
    v.check("weights on the minimal plane", mech.plane_weights.holds, mech.plane_weights.witness.clone());

    let mut results = json!({
        "seed": seed.summary(),
        "ell": ell,
        "n": cc.n,
        "k": cc.k(),
        "t": cc.t,
        "block_dominance": full.as_ref().unwrap_or(&cc).dominance,
        "mechanism": mech,
        "code": cc.sparse(),
        "gap": gap_statement(&seed),
    });

    match args.verify {
        "structural" => {}
        "brute" => {
            let ts: Vec<usize> = match args.truncate {
                Some(t) => vec![t],
                None => (1..=4).collect(),
            };
            let mut out = Vec::new();
            for t in ts {
                let r = verify_prop53_truncated(&build(&seed, t, &ctx.limits)?, &ctx.limits)?;
                v.check(&format!("unique minimal plane at t = {t}"), r.holds, None);
                out.push(r);
            }
            results["truncated"] = json!(out);
        }
        _ => {
            let t = args.truncate.unwrap_or(1);
            let r = verify_gb(&build(&seed, t, &ctx.limits)?, &ctx.limits)?;
            let detail = format!("M_G is {}a d2-test set at t = {t}", if r.mg_is_test_set { "" } else { "not " });
            v.push("basis tier on a truncation", Status::Silent, Some(detail));
            results["gb"] = json!(r);
        }
    }
    v.push("full-scale basis", Status::Silent, Some(gap_statement(&seed)));
    Ok((results, v))
}

pub fn order_check(ctx: &mut Ctx, q: u32, n: usize, m: Option<usize>) -> CliResult {
    let f = FieldSpec::of_order(q)?;
    let mut v = Verdicts::default();
    let minus = check_minus_compatibility(ctx.order, &f, n, &ctx.limits, ctx.seed);
    v.push("sign compatibility on disjoint supports", order_status(&minus), Some(minus.label().into()));
    let mut results = json!({ "field": field_json(&f), "order": ctx.order, "n": n, "minus_compatibility": minus });
    if let Some(m) = m {
        let dom = check_block_dominance(ctx.order, &f, n, m, &ctx.limits)?;
        v.push("block dominance", order_status(&dom), Some(dom.label().into()));
        results["m"] = json!(m);
        results["block_dominance"] = json!(dom);
    }
    Ok((results, v))
}

fn has_binomial(gb: &GroebnerBasis, lead: &[(usize, usize, u8)], trail: &[(usize, usize, u8)]) -> Result<bool, Error> {
    let (n, q) = (gb.n(), gb.field().q());
    Ok(gb.contains(&Monomial::from_terms(n, q, lead)?, &Monomial::from_terms(n, q, trail)?))
}

pub fn paper_examples(ctx: &mut Ctx) -> CliResult {
    let mut v = Verdicts::default();
    let limits = &ctx.limits;
    let order = OrderKind::DegRevLex;

    let code = ternary_9_3();
    let gb = reduced_gb(&code, order, limits)?;
    let stats = gb.export().stats;
    let a = Analysis::new(&code, order, limits)?;
    let mg = compute_mg(&code, &gb, limits)?;
    let f_member = has_binomial(&gb, &[(1, 1, 1), (8, 2, 1)], &[(6, 2, 1)])?;
    let g_member = has_binomial(&gb, &[(6, 2, 1), (7, 2, 1), (9, 2, 1)], &[(2, 1, 1), (5, 1, 1)])?;
    let counts_ok = stats.count == 457 && stats.rx_count == 27;
    let mut first = json!({
        "gb": stats,
        "m1": a.m1, "m2": a.m2, "I": a.i(), "J": a.j(), "d2": a.d2, "intersection": a.intersection(),
        "contains_f": f_member, "contains_g": g_member,
        "mg_is_d2_test_set": a.is_d2_test_set(&mg)?.is_some(),
    });
    if !counts_ok {
        let mut diag = Vec::new();
        for o in [OrderKind::DegRevLex, OrderKind::DegLex] {
            let s = reduced_gb(&code, o, limits)?.export().stats;
            diag.push(json!({ "order": o, "count": s.count, "rx_count": s.rx_count }));
        }
        first["order_diagnostics"] = json!(diag);
    }
    v.check("(9,3) basis has 457 binomials, 27 field relations", counts_ok, None);
    v.check("(9,3) pair m1, m2", a.m1.0 == [2, 0, 0, 0, 0, 2, 0, 1, 0] && a.m2.0 == [0, 1, 0, 0, 1, 1, 1, 0, 1], None);
    v.check(
        "(9,3) I, J, d2, |I∩J|",
        a.i() == [1, 6, 8] && a.j() == [2, 5, 6, 7, 9] && a.d2 == 7 && a.intersection() == 1,
        None,
    );
    v.check("(9,3) named binomials present", f_member && g_member, None);
    v.check("(9,3) M_G is a d2-test set", a.is_d2_test_set(&mg)?.is_some(), None);

    let code = ternary_8_2();
    let b = Analysis::new(&code, order, limits)?;
    let weights: Vec<usize> = b.table.words.iter().filter(|w| !w.is_zero()).map(Word::weight).collect();
    let x = b.intersection();
    let jw = b.m2.weight();
    v.check("(8,2) eight nonzero words of weight 6", weights.len() == 8 && weights.iter().all(|&w| w == 6), None);
    v.check("(8,2) d2 = 8 and |I∩J| = 4", b.d2 == 8 && x == 4, None);
    v.check("(8,2) hypothesis fails while the (q-1)/q bound holds", 2 * x > jw + 1 && 3 * x <= 2 * b.m1.weight(), None);
    let second = json!({
        "weights": weights, "d2": b.d2, "I": b.i(), "J": b.j(), "intersection": x,
        "hypothesis": b.hypothesis_46(), "prop42": b.prop42(),
    });

    let mut family = Vec::new();
    for q in [3u32, 4, 5] {
        let s = example_seed(q, order, limits)?;
        let qs = q as usize;
        let sum = s.summary();
        let ok = sum.weights == [2 * qs]
            && s.d2 == 2 * qs + 2
            && s.intersection() == 2 * qs - 2
            && s.d2 < 3 * s.r
            && s.d2 < s.c1p.weight() + s.r;
        v.check(&format!("two-row family over GF({q})"), ok, None);
        family.push(sum);
    }
    Ok((json!({ "ternary_9_3": first, "ternary_8_2": second, "family": family }), v))
}
