//! One function per subcommand, each returning a CommandReport or a
//! coded failure.

use std::path::Path;

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use hyperspec_core::charpoly2::{charpoly_n2, spectrum_n2};
use hyperspec_core::enumerate::{edges_connected, EdgeSpace};
use hyperspec_core::hyperop::{HyperOp, TensorKind};
use hyperspec_core::labeling::{find_half_sum_labeling, find_odd_bipartition};
use hyperspec_core::scalar::{rat_display, rat_int, Rat};
use hyperspec_core::spectra::{
    conjecture_probe, lift_adjacency_eigenpair, lift_regular_lap, lift_regular_slap,
    neg_rho_witness, residual, slap_null_witness, spectral_radius_power, SpectraError,
};
use hyperspec_core::tensor::{
    adjacency_tensor, laplacian_tensor, parse_tns, signless_laplacian_tensor, to_tns, Tensor,
    TnsTensor,
};
use hyperspec_core::trace::{
    charpoly_coefficients, laplacian_trace_formula, regular_coefficient_formula, trace_d,
    TraceBudget, TraceError,
};
use hyperspec_core::walks::ArcMultiset;
use hyperspec_core::Hypergraph;

use crate::matspec::{adjacency_spectrum, eigenvector_for};
use crate::report::{
    digest_bytes, fmt_c64, fmt_f64, CliError, CommandReport, EXIT_NUMERICAL, EXIT_PRECONDITION,
};
use crate::TensorArg;

fn read_input(path: &Path) -> Result<(String, String), CliError> {
    let bytes = std::fs::read(path)
        .map_err(|e| CliError::precondition(format!("cannot read {}: {e}", path.display())))?;
    let digest = digest_bytes(&bytes);
    let text = String::from_utf8(bytes)
        .map_err(|_| CliError::precondition("input is not valid UTF-8"))?;
    Ok((text, digest))
}

fn load_hypergraph(path: &Path) -> Result<(Hypergraph, String), CliError> {
    let (text, digest) = read_input(path)?;
    let h = Hypergraph::parse_hgf(&text)
        .map_err(|e| CliError::precondition(format!("{}: {e}", path.display())))?;
    Ok((h, digest))
}

fn kind_of(arg: TensorArg) -> TensorKind {
    match arg {
        TensorArg::Adj => TensorKind::Adjacency,
        TensorArg::Lap => TensorKind::Laplacian,
        TensorArg::Slap => TensorKind::SignlessLaplacian,
    }
}

fn tensor_of(h: &Hypergraph, kind: TensorKind) -> Tensor<Rat> {
    match kind {
        TensorKind::Adjacency => adjacency_tensor(h),
        TensorKind::Laplacian => laplacian_tensor(h),
        TensorKind::SignlessLaplacian => signless_laplacian_tensor(h),
    }
}

fn trace_err(e: TraceError) -> CliError {
    CliError {
        code: EXIT_PRECONDITION,
        message: format!("{e}"),
    }
}

fn spectra_err(e: SpectraError) -> CliError {
    let code = match e {
        SpectraError::NonConvergence { .. } | SpectraError::VerificationFailed { .. } => {
            EXIT_NUMERICAL
        }
        _ => EXIT_PRECONDITION,
    };
    CliError {
        code,
        message: format!("{e}"),
    }
}

fn one_based(vs: &[usize]) -> Vec<Value> {
    vs.iter().map(|&v| json!(v + 1)).collect()
}

pub fn cmd_info(path: &Path) -> Result<CommandReport, CliError> {
    let (h, digest) = load_hypergraph(path)?;
    let mut rep = CommandReport::new("info", digest);
    rep.put("k", h.k());
    rep.put("n", h.n());
    rep.put("m", h.num_edges());
    rep.put(
        "degrees",
        Value::Array(h.degrees().0.iter().map(|&d| json!(d)).collect()),
    );
    rep.put("connected", h.is_connected());
    rep.put("core_vertices", Value::Array(one_based(&h.core_vertices())));
    Ok(rep)
}

pub fn cmd_trace(
    path: &Path,
    tensor: TensorArg,
    d: usize,
    formula: bool,
) -> Result<CommandReport, CliError> {
    let (h, digest) = load_hypergraph(path)?;
    let kind = kind_of(tensor);
    if formula && kind == TensorKind::Adjacency {
        return Err(CliError::precondition(
            "--formula applies to lap and slap tensors",
        ));
    }
    if formula && d > h.k() {
        return Err(CliError::precondition(format!(
            "closed form covers orders up to k = {}, got d = {d}",
            h.k()
        )));
    }
    let t = tensor_of(&h, kind);
    let budget = TraceBudget::default_for(h.k());
    let tr = trace_d(&t, d, budget).map_err(trace_err)?;
    let mut rep = CommandReport::new("trace", digest);
    rep.put("d", d);
    rep.put("trace", rat_display(&tr));
    if formula {
        let want = laplacian_trace_formula(&h, d, kind == TensorKind::SignlessLaplacian)
            .map_err(trace_err)?;
        rep.put("formula", rat_display(&want));
        rep.put("verdict", if tr == want { "EQUAL" } else { "DIFFER" });
    }
    Ok(rep)
}

enum CharpolyInput {
    Graph(Hypergraph),
    Tensor(Tensor<Rat>),
}

fn load_charpoly_input(path: &Path) -> Result<(CharpolyInput, String), CliError> {
    if path.extension().is_some_and(|e| e == "tns") {
        let (text, digest) = read_input(path)?;
        match parse_tns(&text)
            .map_err(|e| CliError::precondition(format!("{}: {e}", path.display())))?
        {
            TnsTensor::Rational(t) => Ok((CharpolyInput::Tensor(t), digest)),
            TnsTensor::Complex(_) => Err(CliError::precondition(
                "exact characteristic polynomials need a rational tensor",
            )),
        }
    } else {
        let (h, digest) = load_hypergraph(path)?;
        Ok((CharpolyInput::Graph(h), digest))
    }
}

fn coeff_strings_desc(coeffs: &[Rat]) -> Vec<Value> {
    coeffs
        .iter()
        .rev()
        .map(|c| json!(rat_display(c)))
        .collect()
}

pub fn cmd_charpoly(
    path: &Path,
    t: Option<usize>,
    n2: bool,
    regular: bool,
    max_iter: usize,
    tol: f64,
) -> Result<CommandReport, CliError> {
    let (input, digest) = load_charpoly_input(path)?;
    let mut rep = CommandReport::new("charpoly", digest);
    if n2 {
        let CharpolyInput::Tensor(tensor) = &input else {
            return Err(CliError::precondition(
                "--n2 needs a .tns rational tensor file",
            ));
        };
        if tensor.dim() != 2 {
            return Err(CliError::precondition(format!(
                "--n2 needs dimension 2, got {}",
                tensor.dim()
            )));
        }
        let cp = charpoly_n2(tensor)
            .map_err(|e| CliError::precondition(format!("{e}")))?;
        rep.put("degree", cp.degree().unwrap_or(0));
        rep.put("coefficients", Value::Array(coeff_strings_desc(cp.coeffs())));
        match spectrum_n2(tensor, max_iter, tol.max(1e-12))
            .map_err(|e| CliError::precondition(format!("{e}")))?
        {
            Some(roots) => {
                let items: Vec<Value> = roots
                    .iter()
                    .map(|(z, m)| json!({ "value": fmt_c64(*z), "multiplicity": m }))
                    .collect();
                rep.put("spectrum", Value::Array(items));
            }
            None => rep.warn("root finder did not converge; spectrum omitted"),
        }
        return Ok(rep);
    }
    let Some(t) = t else {
        return Err(CliError::precondition("pass --t T or --n2"));
    };
    match input {
        CharpolyInput::Tensor(tensor) => {
            let budget = TraceBudget::default_for(tensor.order());
            let traces: Vec<Rat> = (1..=t)
                .map(|d| trace_d(&tensor, d, budget))
                .collect::<Result<_, _>>()
                .map_err(trace_err)?;
            let p = charpoly_coefficients(&traces);
            rep.put(
                "coefficients",
                Value::Array(p.iter().map(|c| json!(rat_display(c))).collect()),
            );
        }
        CharpolyInput::Graph(h) => {
            if t > h.k() {
                return Err(CliError::precondition(format!(
                    "traces beyond order k = {} exceed the enumeration budget",
                    h.k()
                )));
            }
            let budget = TraceBudget::default_for(h.k());
            let l = laplacian_tensor(&h);
            let q = signless_laplacian_tensor(&h);
            let tr_l: Vec<Rat> = (1..=t)
                .map(|d| trace_d(&l, d, budget))
                .collect::<Result<_, _>>()
                .map_err(trace_err)?;
            let tr_q: Vec<Rat> = (1..=t)
                .map(|d| trace_d(&q, d, budget))
                .collect::<Result<_, _>>()
                .map_err(trace_err)?;
            let p_l = charpoly_coefficients(&tr_l);
            let p_q = charpoly_coefficients(&tr_q);
            rep.put(
                "laplacian",
                Value::Array(p_l.iter().map(|c| json!(rat_display(c))).collect()),
            );
            rep.put(
                "signless",
                Value::Array(p_q.iter().map(|c| json!(rat_display(c))).collect()),
            );
            if regular {
                let Some(d) = h.degrees().is_regular() else {
                    return Err(CliError::precondition(
                        "--regular needs a regular hypergraph",
                    ));
                };
                let mut equal = true;
                for (i, (pl, pq)) in p_l.iter().zip(&p_q).enumerate() {
                    let (wl, wq) =
                        regular_coefficient_formula(h.n(), h.k(), d, i + 1).map_err(trace_err)?;
                    if *pl != wl || *pq != wq {
                        equal = false;
                    }
                }
                rep.put("regular_degree", d);
                rep.put("verdict", if equal { "EQUAL" } else { "DIFFER" });
            }
        }
    }
    Ok(rep)
}

pub fn cmd_rho(
    path: &Path,
    tensor: TensorArg,
    tol: f64,
    max_iter: usize,
) -> Result<CommandReport, CliError> {
    let (h, digest) = load_hypergraph(path)?;
    let kind = kind_of(tensor);
    if kind == TensorKind::Laplacian {
        return Err(CliError::precondition(
            "the Laplacian is not nonnegative; rho supports adj and slap",
        ));
    }
    let out = spectral_radius_power(&h, kind, tol, max_iter).map_err(spectra_err)?;
    let mut rep = CommandReport::new("rho", digest);
    rep.put("rho", fmt_f64(out.pair.lambda.re));
    rep.put("residual", fmt_f64(out.pair.residual));
    rep.put(
        "eigenvector",
        Value::Array(out.pair.x.iter().map(|z| json!(fmt_c64(*z))).collect()),
    );
    if out.component_rhos.len() > 1 {
        rep.put(
            "component_rhos",
            Value::Array(out.component_rhos.iter().map(|r| json!(fmt_f64(*r))).collect()),
        );
    }
    for w in out.warnings {
        rep.warn(w);
    }
    Ok(rep)
}

pub fn cmd_oddbip(path: &Path, witness: bool) -> Result<CommandReport, CliError> {
    let (h, digest) = load_hypergraph(path)?;
    let mut rep = CommandReport::new("oddbip", digest);
    match find_odd_bipartition(&h) {
        None => rep.put("v1", "none"),
        Some(l) => {
            let v1 = l.support();
            rep.put("v1", Value::Array(one_based(&v1)));
            if witness {
                if h.k() % 2 != 0 {
                    rep.warn("null-vector witness requires even k; skipped");
                } else {
                    let w = slap_null_witness(&h, &v1).map_err(spectra_err)?;
                    rep.put("witness_lambda", "0");
                    rep.put("witness_residual", "0 (exact rational check)");
                    rep.put(
                        "witness_vector",
                        Value::Array(w.x.iter().map(|z| json!(fmt_c64(*z))).collect()),
                    );
                }
            }
        }
    }
    Ok(rep)
}

pub fn cmd_labeling(
    path: &Path,
    witness: bool,
    max_iter: usize,
) -> Result<CommandReport, CliError> {
    let (h, digest) = load_hypergraph(path)?;
    let mut rep = CommandReport::new("labeling", digest);
    if h.k() % 2 != 0 {
        rep.put("labeling", "none (k odd)");
        return Ok(rep);
    }
    match find_half_sum_labeling(&h) {
        None => rep.put("labeling", "none"),
        Some(f) => {
            rep.put(
                "labeling",
                Value::Array(f.values.iter().map(|&v| json!(v)).collect()),
            );
            if witness {
                let phases: Vec<Complex64> = f
                    .values
                    .iter()
                    .map(|&v| {
                        Complex64::from_polar(
                            1.0,
                            2.0 * std::f64::consts::PI * v as f64 / h.k() as f64,
                        )
                    })
                    .collect();
                let op = HyperOp::new(&h, TensorKind::SignlessLaplacian);
                let r = residual(&op, Complex64::zero(), &phases).map_err(spectra_err)?;
                rep.put("q_null_residual", fmt_f64(r));
                if h.is_connected() {
                    let pair = neg_rho_witness(&h, &f, max_iter).map_err(spectra_err)?;
                    rep.put("neg_rho", fmt_f64(pair.lambda.re));
                    rep.put("neg_rho_residual", fmt_f64(pair.residual));
                } else {
                    rep.warn("-rho witness needs a connected hypergraph; skipped");
                }
            }
        }
    }
    Ok(rep)
}

pub fn cmd_power(
    path: &Path,
    k: usize,
    out: Option<&Path>,
) -> Result<CommandReport, CliError> {
    let (g, digest) = load_hypergraph(path)?;
    let p = g
        .power(k)
        .map_err(|e| CliError::precondition(format!("{e}")))?;
    let hgf = p.to_hgf();
    let mut rep = CommandReport::new("power", digest);
    rep.put("k", k);
    rep.put("n", p.n());
    rep.put("m", p.num_edges());
    match out {
        Some(dest) => {
            std::fs::write(dest, &hgf).map_err(|e| {
                CliError::precondition(format!("cannot write {}: {e}", dest.display()))
            })?;
            rep.put("written", dest.display().to_string());
        }
        None => rep.put("hgf", hgf.trim_end().replace('\n', " / ")),
    }
    Ok(rep)
}

pub fn cmd_lift(
    path: &Path,
    k: usize,
    tensor: TensorArg,
    max_iter: usize,
) -> Result<CommandReport, CliError> {
    let (g, digest) = load_hypergraph(path)?;
    if g.k() != 2 {
        return Err(CliError::precondition("lift needs a 2-uniform base graph"));
    }
    let kind = kind_of(tensor);
    if kind != TensorKind::Adjacency && g.degrees().is_regular().is_none() {
        return Err(CliError::precondition(
            "lap/slap lifts need a regular base graph",
        ));
    }
    let spectrum = adjacency_spectrum(&g, max_iter.max(5000), 1e-13)
        .ok_or_else(|| CliError::numerical("root finder did not converge on the base spectrum"))?;
    let mut rep = CommandReport::new("lift", digest);
    rep.put(
        "source_spectrum",
        Value::Array(
            spectrum
                .iter()
                .map(|(v, m)| json!({ "value": fmt_f64(*v), "multiplicity": m }))
                .collect(),
        ),
    );
    let mut lifts: Vec<Value> = Vec::new();
    for &(alpha, _) in &spectrum {
        if alpha.abs() < 1e-9 {
            lifts.push(json!({ "source": fmt_f64(alpha), "status": "skipped (zero source)" }));
            continue;
        }
        let x = eigenvector_for(&g, alpha).ok_or_else(|| {
            CliError::numerical(format!("no eigenvector found for source {alpha}"))
        })?;
        let ac = Complex64::new(alpha, 0.0);
        match kind {
            TensorKind::Adjacency => match lift_adjacency_eigenpair(&g, ac, &x, k) {
                Ok(pair) => lifts.push(json!({
                    "source": fmt_f64(alpha),
                    "lifted": fmt_c64(pair.lambda),
                    "status": "verified",
                    "residual": fmt_f64(pair.residual),
                })),
                Err(SpectraError::VerificationFailed { residual }) => lifts.push(json!({
                    "source": fmt_f64(alpha),
                    "lifted": fmt_c64(ac.powf(2.0 / k as f64)),
                    "status": "unverified (branch rejected by residual)",
                    "residual": fmt_f64(residual),
                })),
                Err(e) => return Err(spectra_err(e)),
            },
            _ => {
                let lifter = if kind == TensorKind::SignlessLaplacian {
                    lift_regular_slap
                } else {
                    lift_regular_lap
                };
                let rep_l = lifter(&g, ac, &x, k).map_err(spectra_err)?;
                let roots: Vec<Value> = rep_l
                    .witnesses
                    .iter()
                    .map(|w| {
                        json!({
                            "value": fmt_c64(w.lambda),
                            "status": "verified",
                            "residual": fmt_f64(w.residual),
                        })
                    })
                    .collect();
                let mut obj = serde_json::Map::new();
                obj.insert("source".into(), json!(fmt_f64(alpha)));
                obj.insert("roots".into(), Value::Array(roots));
                if let Some(r) = rep_l.rho {
                    obj.insert("rho".into(), json!(fmt_f64(r)));
                }
                for note in rep_l.notes {
                    rep.warn(note);
                }
                lifts.push(Value::Object(obj));
            }
        }
    }
    rep.put("lifts", Value::Array(lifts));
    Ok(rep)
}

fn probe_payload(rep: &mut CommandReport, h: &Hypergraph, max_iter: usize) -> Result<(), CliError> {
    let probe = conjecture_probe(h, max_iter).map_err(spectra_err)?;
    rep.put("odd_bipartite", probe.cond1);
    rep.put("half_sum", probe.cond4);
    if let Some(l) = &probe.odd_bipartition {
        rep.put("v1", Value::Array(one_based(&l.support())));
    }
    if let Some(l) = &probe.half_sum {
        rep.put(
            "labeling",
            Value::Array(l.values.iter().map(|&v| json!(v)).collect()),
        );
    }
    if let Some(w) = &probe.q_null_witness {
        rep.put("q_null_residual", fmt_f64(w.residual));
    }
    if let Some(w) = &probe.neg_rho {
        rep.put("neg_rho", fmt_f64(w.lambda.re));
        rep.put("neg_rho_residual", fmt_f64(w.residual));
    }
    rep.put("specimen", probe.specimen);
    Ok(())
}

pub fn cmd_conjecture(
    file: Option<&Path>,
    k: Option<usize>,
    nmax: Option<usize>,
    max_iter: usize,
) -> Result<CommandReport, CliError> {
    if let Some(path) = file {
        let (h, digest) = load_hypergraph(path)?;
        let mut rep = CommandReport::new("conjecture", digest);
        probe_payload(&mut rep, &h, max_iter)?;
        return Ok(rep);
    }
    let (Some(k), Some(nmax)) = (k, nmax) else {
        return Err(CliError::precondition(
            "corpus mode needs --k and --nmax (or pass a file)",
        ));
    };
    if !(2..=6).contains(&k) || nmax < k || nmax > 9 {
        return Err(CliError::precondition(
            "enumeration budget: 2 <= k <= 6, k <= nmax <= 9",
        ));
    }
    let digest = digest_bytes(format!("corpus k={k} nmax={nmax}").as_bytes());
    let mut rep = CommandReport::new("conjecture", digest);
    let mut per_n: Vec<Value> = Vec::new();
    let mut specimens: Vec<String> = Vec::new();
    let mut all_consistent = true;
    for n in k..=nmax {
        let space = EdgeSpace::new(k, n);
        let mut classes = 0u64;
        let mut connected = 0u64;
        let mut c1 = 0u64;
        let mut c4 = 0u64;
        let mut both = 0u64;
        let mut probe_err: Option<CliError> = None;
        space.for_each_canonical(|edges| {
            if probe_err.is_some() {
                return;
            }
            classes += 1;
            if !edges_connected(&space, edges, n) {
                return;
            }
            connected += 1;
            let h = space.hypergraph(edges);
            match conjecture_probe(&h, max_iter) {
                Ok(p) => {
                    if p.cond1 {
                        c1 += 1;
                    }
                    if p.cond4 {
                        c4 += 1;
                    }
                    if p.cond1 && p.cond4 {
                        both += 1;
                    }
                    if p.specimen {
                        specimens.push(h.to_hgf().trim_end().replace('\n', " / "));
                    }
                }
                Err(e) => probe_err = Some(spectra_err(e)),
            }
        });
        if let Some(e) = probe_err {
            return Err(e);
        }
        if c1 != c4 || c1 != both {
            all_consistent = false;
        }
        per_n.push(json!({
            "n": n,
            "classes": classes,
            "connected": connected,
            "odd_bipartite": c1,
            "half_sum": c4,
            "both": both,
        }));
    }
    rep.put("per_n", Value::Array(per_n));
    rep.put("specimens", Value::Array(specimens.iter().map(|s| json!(s)).collect()));
    rep.put("consistent", all_consistent);
    if k % 2 == 1 {
        rep.warn("odd k: both conditions are uniformly false, consistency is vacuous");
    }
    Ok(rep)
}

fn check_matrix_calibration(rng: &mut impl Rng) -> bool {
    for _ in 0..5 {
        let n = rng.gen_range(2..=3usize);
        let mut a = vec![vec![Rat::zero(); n]; n];
        let mut t: Tensor<Rat> = Tensor::zeros(2, n);
        for i in 0..n {
            for j in 0..n {
                let v = rng.gen_range(-3..=3i64);
                a[i][j] = rat_int(v);
                t.set(&[i, j], rat_int(v));
            }
        }
        let mut power = a.clone();
        for d in 1..=4usize {
            let want: Rat = (0..n).map(|i| power[i][i].clone()).sum();
            let got = trace_d(&t, d, TraceBudget { max_d: 4, max_n: 8 });
            if got != Ok(want) {
                return false;
            }
            // power <- power * a
            let mut next = vec![vec![Rat::zero(); n]; n];
            for i in 0..n {
                for l in 0..n {
                    for j in 0..n {
                        next[i][j] += &power[i][l] * &a[l][j];
                    }
                }
            }
            power = next;
        }
    }
    true
}

fn check_walk_counts(rng: &mut impl Rng) -> bool {
    for _ in 0..20 {
        let n = rng.gen_range(1..=4usize);
        let mut a = ArcMultiset::new();
        for _ in 0..rng.gen_range(1..=5usize) {
            a.add(rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(1..=2u64));
        }
        if a.count_closed_walks() != a.count_closed_walks_backtracking() {
            return false;
        }
    }
    true
}

fn check_trace_formulas() -> bool {
    let corpus = [
        Hypergraph::single_edge(3),
        Hypergraph::complete(3, 4),
        Hypergraph::single_edge(4),
    ];
    for h in &corpus {
        let l = laplacian_tensor(h);
        let q = signless_laplacian_tensor(h);
        for t in 1..=h.k() {
            let budget = TraceBudget::default_for(h.k());
            if trace_d(&l, t, budget).ok() != laplacian_trace_formula(h, t, false).ok() {
                return false;
            }
            if trace_d(&q, t, budget).ok() != laplacian_trace_formula(h, t, true).ok() {
                return false;
            }
        }
    }
    true
}

fn check_n2_unit() -> bool {
    let t = hyperspec_core::tensor::unit_tensor::<Rat>(3, 2);
    let Ok(cp) = charpoly_n2(&t) else { return false };
    let want = [1i64, -4, 6, -4, 1];
    cp.coeffs().len() == 5
        && cp
            .coeffs()
            .iter()
            .zip(want.iter().rev())
            .all(|(c, &w)| *c == rat_int(w))
}

fn check_round_trips() -> bool {
    let h = Hypergraph::complete(3, 5);
    if Hypergraph::parse_hgf(&h.to_hgf()).as_ref() != Ok(&h) {
        return false;
    }
    let t = adjacency_tensor(&Hypergraph::single_edge(3));
    match parse_tns(&to_tns(&t)) {
        Ok(TnsTensor::Rational(back)) => back == t,
        _ => false,
    }
}

fn check_perron_triangle() -> bool {
    let c3 = Hypergraph::cycle(3);
    match spectral_radius_power(&c3, TensorKind::Adjacency, 1e-10, 10_000) {
        Ok(out) => (out.pair.lambda.re - 2.0).abs() < 1e-8,
        Err(_) => false,
    }
}

pub fn cmd_check(file: Option<&Path>, seed: u64) -> Result<CommandReport, CliError> {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let digest = match file {
        Some(p) => {
            digest_bytes(&std::fs::read(p).map_err(|e| {
                CliError::precondition(format!("cannot read {}: {e}", p.display()))
            })?)
        }
        None => digest_bytes(format!("battery seed={seed}").as_bytes()),
    };
    let mut rep = CommandReport::new("check", digest);
    let mut all = true;
    let mut record = |rep: &mut CommandReport, name: &str, ok: bool| {
        rep.put(name, if ok { "PASS" } else { "FAIL" });
        all &= ok;
    };
    record(&mut rep, "matrix_trace_calibration", check_matrix_calibration(&mut rng));
    record(&mut rep, "walk_count_oracle", check_walk_counts(&mut rng));
    record(&mut rep, "laplacian_trace_formulas", check_trace_formulas());
    record(&mut rep, "n2_unit_charpoly", check_n2_unit());
    record(&mut rep, "format_round_trips", check_round_trips());
    record(&mut rep, "perron_triangle", check_perron_triangle());
    if let Some(path) = file {
        let (h, _) = load_hypergraph(path)?;
        record(
            &mut rep,
            "file_round_trip",
            Hypergraph::parse_hgf(&h.to_hgf()).as_ref() == Ok(&h),
        );
        let handshake =
            h.degrees().0.iter().sum::<u64>() as usize == h.k() * h.num_edges();
        record(&mut rep, "file_degree_handshake", handshake);
        if let Some(l) = find_odd_bipartition(&h) {
            record(&mut rep, "file_odd_bipartition_valid", l.is_valid_for(&h));
        }
        if let Some(l) = find_half_sum_labeling(&h) {
            record(&mut rep, "file_half_sum_valid", l.is_valid_for(&h));
        }
        if h.k() <= 4 && h.n() <= 6 {
            let ok = (1..=h.k()).all(|t| {
                let budget = TraceBudget::default_for(h.k());
                trace_d(&laplacian_tensor(&h), t, budget).ok()
                    == laplacian_trace_formula(&h, t, false).ok()
            });
            record(&mut rep, "file_trace_formula", ok);
        } else {
            rep.warn("file too large for the exact trace cross-check; skipped");
        }
    }
    if !all {
        rep.exit_code = EXIT_NUMERICAL;
        rep.warn("invariant battery failed; this indicates an implementation bug");
    }
    Ok(rep)
}
