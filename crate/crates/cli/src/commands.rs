use std::fmt::{self, Write as _};

use anyhow::{Context, Result};
use linkconc_concordance::{
    f_window, split_obstruction, CubeReport, FTable, Functions, SplitReport, Variant, Window,
    WindowOptions,
};
use linkconc_core::bounds::{
    all_reports, spl_parity, splitting_lower_bound, strong_splitting_lower_bound, torus_link_value,
    BoundReport, Parity, Provenance,
};
use linkconc_core::braid::{quasipositive_value, BandWord};
use linkconc_core::rational::fmt_q;
use linkconc_core::seifert::{
    classify, oriented_resolution, s_minus, s_plus, seifert_genus, seifert_graph,
};
use linkconc_core::whitehead::{fully_clasped, reduced, Clasp};
use linkconc_core::{catalog, Diagram};
use linkconc_homology::lee::{lee_gr, s_from_table};
use linkconc_homology::{khovanov_homology, HomologyError, Method, SResult};
use serde_json::{json, Value};

use crate::{ClaspArg, Cli, Command, Format, FunctionsArg, Global};

/// A mistake in how the tool was invoked; exits with status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// A failure that still has something worth printing.
#[derive(Debug)]
pub struct WithOutput {
    pub output: String,
    pub message: String,
}

impl fmt::Display for WithOutput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for WithOutput {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

struct Input {
    expr: String,
    diagram: Diagram,
}

fn load(g: &Global, positional: &Option<String>) -> Result<Input> {
    let given = [positional.is_some(), g.input.is_some(), g.catalog.is_some()];
    match given.iter().filter(|&&b| b).count() {
        0 => {
            return Err(usage(
                "no link given: pass an expression, --input FILE or --catalog NAME",
            ))
        }
        1 => {}
        _ => {
            return Err(usage(
                "give exactly one of a link expression, --input or --catalog",
            ))
        }
    }
    let expr = if let Some(path) = &g.input {
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?
    } else if let Some(name) = &g.catalog {
        catalog::lookup(name).ok_or_else(|| usage(format!("no catalog entry named {name:?}")))?;
        name.clone()
    } else {
        positional.clone().unwrap_or_default()
    };
    let diagram =
        catalog::resolve(&expr).with_context(|| format!("resolving {:?}", expr.trim()))?;
    Ok(Input {
        expr: expr.trim().to_string(),
        diagram,
    })
}

fn method(g: &Global) -> Method {
    if g.naive {
        Method::Naive {
            limit: g.naive_limit,
        }
    } else {
        Method::default()
    }
}

fn render(format: Format, value: Value, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).expect("json")),
        Format::Table | Format::Grid => table(),
    }
}

fn matrix_rows(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|r| {
            format!(
                "  [{}]\n",
                r.iter()
                    .map(|x| format!("{x:>3}"))
                    .collect::<Vec<_>>()
                    .join("")
            )
        })
        .collect()
}

pub fn run(cli: &Cli) -> Result<String> {
    let g = &cli.global;
    match &cli.command {
        Command::Info { link } => info(g, &load(g, link)?),
        Command::Seifert { link } => seifert(g, &load(g, link)?),
        Command::Bound { link } => bound(g, &load(g, link)?),
        Command::Double {
            link,
            twists,
            clasp,
            reduced: red,
            component,
        } => double(g, &load(g, link)?, twists, *clasp, *red, *component),
        Command::Kh { link } => kh(g, &load(g, link)?),
        Command::Lee { link } => lee(g, &load(g, link)?),
        Command::S { link } => s(g, &load(g, link)?, false),
        Command::Nu { link } => s(g, &load(g, link)?, true),
        Command::Ftable {
            link,
            variant,
            component,
            range,
            no_prune,
        } => ftable(
            g,
            &load(g, link)?,
            variant,
            *component,
            range.as_deref(),
            !no_prune,
        ),
        Command::SplitBound { link } => split_bound(g, &load(g, link)?),
        Command::ObstructSplit {
            link,
            r,
            range,
            functions,
            no_prune,
        } => obstruct(
            g,
            &load(g, link)?,
            *r,
            range.as_deref(),
            *functions,
            !no_prune,
        ),
        Command::Catalog { action } => catalog_cmd(g, action),
    }
}

fn info(g: &Global, inp: &Input) -> Result<String> {
    let d = &inp.diagram;
    let lk = d.linking_matrix();
    let o = oriented_resolution(d).count();
    let genus: Vec<String> = match seifert_genus(d) {
        Ok(x) => vec![fmt_q(&x)],
        Err(_) => d
            .pieces()
            .iter()
            .map(|p| seifert_genus(p).map(|x| fmt_q(&x)).unwrap_or_default())
            .collect(),
    };
    let class = classify(d);
    let value = json!({
        "name": d.name(),
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "writhe": d.writhe(),
        "n_plus": d.n_plus(),
        "n_minus": d.n_minus(),
        "linking_matrix": lk.0,
        "split_components": d.split_components(),
        "alternating": d.is_alternating(),
        "class": class.label(),
        "seifert_circles": o,
        "s_plus": s_plus(d),
        "s_minus": s_minus(d),
        "genus": genus,
    });
    Ok(render(g.format, value, || {
        let mut s = String::new();
        let _ = writeln!(s, "link:             {}", d.name().unwrap_or(&inp.expr));
        let _ = writeln!(
            s,
            "crossings:        {} ({} positive, {} negative)",
            d.crossing_count(),
            d.n_plus(),
            d.n_minus()
        );
        let _ = writeln!(s, "components:       {}", d.component_count());
        let _ = writeln!(s, "writhe:           {}", d.writhe());
        let _ = writeln!(s, "diagram pieces:   {}", d.split_components());
        let _ = writeln!(s, "alternating:      {}", d.is_alternating());
        let _ = writeln!(s, "sign class:       {}", class.label());
        let _ = writeln!(s, "Seifert circles:  {o}");
        let _ = writeln!(s, "s+ / s-:          {} / {}", s_plus(d), s_minus(d));
        if genus.len() == 1 {
            let _ = writeln!(s, "Seifert genus:    {}", genus[0]);
        } else {
            let _ = writeln!(s, "Seifert genus:    per piece {}", genus.join(", "));
        }
        let _ = writeln!(s, "linking matrix:");
        s + &matrix_rows(&lk.0)
    }))
}

fn seifert(g: &Global, inp: &Input) -> Result<String> {
    let d = &inp.diagram;
    let st = oriented_resolution(d);
    let gr = seifert_graph(d);
    let value = json!({
        "circles": st.circles,
        "loops": st.loops,
        "graph": gr,
        "s_plus": s_plus(d),
        "s_minus": s_minus(d),
    });
    Ok(render(g.format, value, || {
        let mut s = String::new();
        let _ = writeln!(s, "{} Seifert circles", st.count());
        for (i, c) in st.circles.iter().enumerate() {
            let _ = writeln!(s, "  circle {i}: edges {c:?}");
        }
        if st.loops > 0 {
            let _ = writeln!(s, "  plus {} crossing-free loops", st.loops);
        }
        let _ = writeln!(s, "graph edges (circle, circle, sign):");
        for (k, e) in gr.edges.iter().enumerate() {
            let _ = writeln!(s, "  crossing {k}: {e:?}");
        }
        let _ = writeln!(s, "s+ = {}, s- = {}", s_plus(d), s_minus(d));
        s
    }))
}

/// Closed-form reports that need the expression itself rather than the diagram.
fn extra_reports(expr: &str) -> Vec<BoundReport> {
    let mut out = Vec::new();
    if expr.starts_with("QP[") {
        if let Ok(v) = BandWord::parse(expr).and_then(|w| quasipositive_value(&w)) {
            out.push(BoundReport {
                value: v,
                exact: true,
                provenance: Provenance::Quasipositive,
                assumptions: vec![],
            });
        }
    }
    let torus = expr
        .strip_prefix("torus(")
        .or_else(|| expr.strip_prefix("T("))
        .and_then(|r| r.strip_suffix(')'))
        .and_then(|r| r.split_once(','))
        .and_then(|(p, q)| Some((p.trim().parse::<u64>().ok()?, q.trim().parse::<u64>().ok()?)));
    if let Some((p, q)) = torus {
        if let Ok(v) = torus_link_value(p, q, true) {
            out.push(BoundReport {
                value: v,
                exact: true,
                provenance: Provenance::TorusFormula,
                assumptions: vec![],
            });
        }
    }
    out
}

fn bound(g: &Global, inp: &Input) -> Result<String> {
    let mut reports = extra_reports(&inp.expr);
    reports.extend(all_reports(&inp.diagram));
    reports.sort_by_key(|r| !r.exact);
    let value = serde_json::to_value(&reports)?;
    Ok(render(g.format, value, || {
        let mut s = String::new();
        for r in &reports {
            let kind = if r.exact { "exact nu =" } else { "nu >=" };
            let prov = serde_json::to_value(r.provenance)
                .ok()
                .and_then(|v| v.as_str().map(String::from));
            let _ = writeln!(
                s,
                "{kind} {}  ({})",
                fmt_q(&r.value),
                prov.unwrap_or_default()
            );
            for a in &r.assumptions {
                let _ = writeln!(s, "    assumes: {a}");
            }
        }
        s
    }))
}

fn double(
    g: &Global,
    inp: &Input,
    twists: &[i64],
    clasp: ClaspArg,
    red: bool,
    component: usize,
) -> Result<String> {
    let clasp = match clasp {
        ClaspArg::Plus => Clasp::Positive,
        ClaspArg::Minus => Clasp::Negative,
    };
    let d = if red {
        let [t] = twists else {
            return Err(usage("--reduced takes exactly one twist"));
        };
        reduced(&inp.diagram, *t, component, clasp)?
    } else {
        fully_clasped(&inp.diagram, twists, clasp)?
    };
    Ok(match g.format {
        Format::Json => format!("{}\n", d.to_json()),
        _ => format!("{}\n", d.to_pd_string()),
    })
}

fn kh(g: &Global, inp: &Input) -> Result<String> {
    let t = khovanov_homology(&inp.diagram, method(g))?;
    let value = json!({ "total": t.total(), "betti": t.to_json() });
    Ok(render(g.format, value, || {
        format!("total dimension {}\n{}", t.total(), t.render_grid())
    }))
}

fn lee(g: &Global, inp: &Input) -> Result<String> {
    let t = lee_gr(&inp.diagram, method(g))?;
    let value = json!({ "total": t.total(), "gr": t.to_json() });
    Ok(render(g.format, value, || {
        format!("total dimension {}\n{}", t.total(), t.render_grid())
    }))
}

fn s_json(r: &SResult, ell: usize) -> Value {
    let mut v = serde_json::to_value(r).expect("json");
    v["gr"] = r.gr.to_json();
    v["components"] = json!(ell);
    v
}

fn s(g: &Global, inp: &Input, nu_only: bool) -> Result<String> {
    let d = &inp.diagram;
    let gr = lee_gr(d, method(g))?;
    let r = match s_from_table(d, gr.clone(), g.assume_symmetric) {
        Ok(r) => r,
        Err(e @ HomologyError::Hypothesis(_)) => {
            let output = render(g.format, json!({ "gr": gr.to_json() }), || {
                format!(
                    "Gr of Lee homology (s not determined):\n{}",
                    gr.render_grid()
                )
            });
            return Err(WithOutput {
                output,
                message: e.to_string(),
            }
            .into());
        }
        Err(e) => return Err(e.into()),
    };
    let ell = d.component_count();
    let applic = serde_json::to_value(r.applicability)?
        .as_str()
        .unwrap_or_default()
        .to_string();
    Ok(render(g.format, s_json(&r, ell), || {
        let mut s = String::new();
        if nu_only {
            let _ = writeln!(s, "nu_s = {}", fmt_q(&r.nu_s));
            let _ = writeln!(s, "s = {}  ({applic})", r.s);
        } else {
            let _ = writeln!(s, "s = {}  ({applic})", r.s);
            let _ = writeln!(s, "nu_s = {}", fmt_q(&r.nu_s));
        }
        for w in &r.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }))
}

fn window_for(range: Option<&str>, dims: usize) -> Result<Window> {
    match range {
        Some(r) => r.parse::<Window>().map_err(|e| usage(e.to_string())),
        None => Ok(Window::cube(-2, 2, dims)),
    }
}

fn ftable_text(t: &FTable) -> String {
    let mut s = format!("{} {} on {:?}\n", t.variant, t.base, t.window.0);
    if let Some(v) = t.nu0 {
        let _ = writeln!(s, "nu0 = {}", fmt_q(&v));
    }
    s += &t.render_grid();
    if t.values.values().any(|e| e.inferred) {
        s += "* inferred from monotonicity\n";
    }
    for a in &t.assumptions {
        let _ = writeln!(s, "assumes: {a}");
    }
    s
}

fn ftable(
    g: &Global,
    inp: &Input,
    variant: &str,
    component: Option<usize>,
    range: Option<&str>,
    prune: bool,
) -> Result<String> {
    let mut v: Variant = variant
        .parse()
        .map_err(|e: linkconc_concordance::ConcordanceError| usage(e.to_string()))?;
    if let Some(c) = component {
        v = v.with_component(c);
    }
    let d = &inp.diagram;
    let w = window_for(range, v.dims(d.component_count()))?;
    let t = f_window(
        d,
        v,
        &w,
        WindowOptions {
            method: method(g),
            prune,
        },
    )?;
    Ok(render(g.format, serde_json::to_value(&t)?, || {
        ftable_text(&t)
    }))
}

fn split_bound(g: &Global, inp: &Input) -> Result<String> {
    let d = &inp.diagram;
    let ell = d.component_count();
    let m = method(g);
    let gr = lee_gr(d, m)?;
    let nu = s_from_table(d, gr, g.assume_symmetric)?;
    let mut knots = Vec::new();
    for i in 0..ell {
        let k = d.sublink(&[i])?;
        knots.push(linkconc_homology::nu_s(&k, false, m)?);
    }
    let lower = splitting_lower_bound(nu.nu_s, &knots);
    let parity = spl_parity(&d.linking_matrix());
    let strong = strong_splitting_lower_bound(lower, parity);
    let value = json!({
        "nu_link": fmt_q(&nu.nu_s),
        "nu_components": knots.iter().map(fmt_q).collect::<Vec<_>>(),
        "splitting_lower_bound": fmt_q(&lower),
        "linking_parity": parity,
        "strong_splitting_lower_bound": strong,
        "warnings": nu.warnings,
    });
    Ok(render(g.format, value, || {
        let mut s = String::new();
        let _ = writeln!(s, "nu_s(L) = {}", fmt_q(&nu.nu_s));
        for (i, k) in knots.iter().enumerate() {
            let _ = writeln!(s, "nu_s(K{i}) = {}", fmt_q(k));
        }
        let _ = writeln!(s, "splitting number >= {}", fmt_q(&lower));
        let p = if parity == Parity::Even {
            "even"
        } else {
            "odd"
        };
        let _ = writeln!(
            s,
            "sum of linking numbers is {p}: strong splitting number >= {strong}"
        );
        for w in &nu.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        s
    }))
}

fn cube_text(c: &CubeReport) -> String {
    let mut s = format!(
        "{}: {} {}-valued {}-cube(s), global max {}\n",
        c.variant,
        c.cubes.len(),
        c.k + 1,
        c.k,
        fmt_q(&c.global_max)
    );
    for cube in &c.cubes {
        let vals: Vec<String> = cube
            .vertices
            .iter()
            .map(|(t, v)| format!("{t:?}={}", fmt_q(v)))
            .collect();
        let _ = writeln!(
            s,
            "  base {:?} axes {:?}: {}",
            cube.base,
            cube.axes,
            vals.join(" ")
        );
    }
    s
}

fn obstruct(
    g: &Global,
    inp: &Input,
    r: Option<usize>,
    range: Option<&str>,
    functions: FunctionsArg,
    prune: bool,
) -> Result<String> {
    let d = &inp.diagram;
    let ell = d.component_count();
    let r = r.unwrap_or(ell);
    if r > ell {
        return Err(usage(format!("--r {r} exceeds the {ell} components")));
    }
    let w = window_for(range, ell)?;
    let which = match functions {
        FunctionsArg::F => Functions::F,
        FunctionsArg::Fbar => Functions::FBar,
        FunctionsArg::Both => Functions::Both,
    };
    let rep: SplitReport = split_obstruction(
        d,
        r,
        &w,
        which,
        WindowOptions {
            method: method(g),
            prune,
        },
    )?;
    Ok(render(g.format, serde_json::to_value(&rep)?, || {
        let verdict = serde_json::to_value(rep.verdict)
            .ok()
            .and_then(|v| v.as_str().map(String::from));
        let mut s = format!("verdict: {}\n", verdict.unwrap_or_default());
        for c in [&rep.plus, &rep.minus].into_iter().flatten() {
            s += &cube_text(c);
        }
        for n in &rep.notes {
            let _ = writeln!(s, "note: {n}");
        }
        s
    }))
}

fn catalog_cmd(g: &Global, action: &str) -> Result<String> {
    if action != "list" {
        return Err(usage(format!(
            "unknown catalog action {action:?}; try `catalog list`"
        )));
    }
    let rows: Vec<(String, usize, usize, String, String)> = catalog::entries()
        .iter()
        .map(|e| {
            let d = e.build();
            (
                e.name.to_string(),
                d.crossing_count(),
                d.component_count(),
                e.generator(),
                e.notes.to_string(),
            )
        })
        .collect();
    let value = json!(rows
        .iter()
        .map(|(n, c, l, gen, notes)| json!({"name": n, "crossings": c, "components": l, "generator": gen, "notes": notes}))
        .collect::<Vec<_>>());
    Ok(render(g.format, value, || {
        let mut s = String::new();
        for (n, c, l, _, notes) in &rows {
            let _ = writeln!(s, "{n:<16} {c:>3} crossings {l:>2} components  {notes}");
        }
        s
    }))
}
