use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use fischer_lab::catalog::{CatalogInstance, Descriptor, InstanceVisitor};
use fischer_lab::fischer::{self, build_system, TranspositionSystem, DEFAULT_MAX_CLASS};
use fischer_lab::groups::cache::{generate_cached, CACHE_DIR_ENV};
use fischer_lab::groups::{self, GeneratedGroup, GroupElement};
use fischer_lab::matsuo::{
    adjoint_spectrum, build_algebra, eigenspace_dimension, gram_radical, miyamoto, pair_type, quotient,
    sigma_homomorphism, MatsuoAlgebra, PairType,
};
use fischer_lab::rational::{format_rational, int, parse_rational, Rational};
use fischer_lab::{Error, Result};
use rayon::prelude::*;

use crate::args::AnalyzeArgs;
use crate::report::*;

/// Groups above this order skip the kernel-of-sigma check, which touches
/// every element.
pub const SIGMA_MAX_ORDER: usize = 100_000;

struct Timer {
    on: bool,
    start: Instant,
}

impl Timer {
    fn lap(&mut self, stage: &str) {
        if self.on {
            eprintln!("timing: {stage}: {:.3}s", self.start.elapsed().as_secs_f64());
        }
        self.start = Instant::now();
    }
}

struct Analyzer<'a> {
    args: &'a AnalyzeArgs,
    descriptor: &'a Descriptor,
    alpha: Rational,
    beta: Rational,
    cache_dir: Option<PathBuf>,
}

pub fn run(args: &AnalyzeArgs) -> Result<AnalysisReport> {
    let descriptor: Descriptor = args.descriptor.parse()?;
    let alpha = parse_rational(&args.alpha)?;
    let beta = parse_rational(&args.beta)?;
    let cache_dir = std::env::var_os(CACHE_DIR_ENV).map(PathBuf::from);
    let instance = descriptor.build()?;
    instance.visit(Analyzer { args, descriptor: &descriptor, alpha, beta, cache_dir })
}

impl InstanceVisitor for Analyzer<'_> {
    type Output = Result<AnalysisReport>;

    fn visit<E: GroupElement>(self, inst: CatalogInstance<E>) -> Result<AnalysisReport> {
        let mut timer = Timer { on: self.args.timing, start: Instant::now() };
        let sys = build_system(&inst.generators, &inst.seeds, DEFAULT_MAX_CLASS)?;
        timer.lap("transpositions");
        let group = generate_cached(self.cache_dir.as_deref(), &inst.generators, self.args.max_order)?;
        let center_order = groups::center(&group).len();
        timer.lap("group closure");
        let fischer = fischer_section(&sys)?;
        timer.lap("fischer graph");

        if sys.len() > self.args.max_axes {
            return Err(Error::SizeCap {
                what: "Matsuo algebra axes",
                size: sys.len(),
                cap: self.args.max_axes,
            });
        }
        let algebra = build_algebra(sys.graph(), self.alpha.clone(), self.beta.clone());
        write_exports(self.args, &sys, &algebra)?;
        let matsuo = matsuo_section(&algebra, &sys, &group, &mut timer)?;

        Ok(AnalysisReport {
            descriptor: self.descriptor.to_string(),
            family: self.descriptor.family().to_string(),
            group: GroupSection { generators: inst.generators.len(), order: group.order(), center_order },
            fischer,
            matsuo,
        })
    }
}

fn fischer_section<E: GroupElement>(sys: &TranspositionSystem<E>) -> Result<FischerSection> {
    let r = fischer::report(sys)?;
    let h_subgroup = match (r.h_triple, r.h_subgroup_order, r.h_center_order) {
        (None, _, _) => Verdict::not_run("no H-triple"),
        (Some(_), Some(54), Some(3)) => Verdict::pass(),
        (Some(_), order, _) => Verdict::fail(format!(
            "unexpected subgroup of order {}",
            order.map_or("above the search cap".to_string(), |o| o.to_string())
        )),
    };
    Ok(FischerSection {
        transpositions: r.transpositions,
        components: r.components,
        connected: r.connected,
        three_transposition: Verdict::pass(),
        symplectic_type: r.symplectic_type,
        h_triple: r.h_triple,
        h_subgroup,
        h_subgroup_order: r.h_subgroup_order,
        h_center_order: r.h_center_order,
    })
}

fn matsuo_section<E: GroupElement>(
    algebra: &MatsuoAlgebra,
    sys: &TranspositionSystem<E>,
    group: &GeneratedGroup<E>,
    timer: &mut Timer,
) -> Result<MatsuoSection> {
    let n = algebra.dim();
    let g = algebra.graph();
    let alpha = algebra.alpha().clone();
    let comps = g.components();

    let ax = algebra.check_axioms();
    let axioms =
        if ax.all_hold() { Verdict::pass() } else { Verdict::fail(format!("axiom check failed: {ax:?}")) };
    timer.lap("axioms");

    let mut unity = Vec::new();
    let mut unity_verdict = Verdict::pass();
    for c in &comps {
        let k = g.valency(c)?;
        match algebra.unity(c) {
            Ok(omega) => unity.push(UnitySummary {
                component: c[0],
                valency: k,
                coefficient: omega.map(|w| format_rational(&w.0[c[0]])),
            }),
            Err(e) => {
                unity_verdict = Verdict::fail(e.to_string());
                unity.push(UnitySummary { component: c[0], valency: k, coefficient: None });
            }
        }
    }
    timer.lap("unity");

    let radical = gram_radical(algebra);
    let q = quotient(algebra, &radical);
    let quotient_dim = q.as_ref().map_or(0, |q| q.dim());
    let quotient_verdict = Verdict::from_result(&q);
    let positive_definite = algebra.positive_definite();
    timer.lap("radical");

    let (spectra, spectra_verdict, miyamoto_verdict) = if alpha == int(0) || alpha == int(2) {
        let why = format!("alpha = {} merges eigenvalues", format_rational(&alpha));
        (Vec::new(), Verdict::not_run(why.clone()), Verdict::not_run(why))
    } else {
        let (spectra, sv) = spectra(algebra, &comps)?;
        let mv =
            (0..n).into_par_iter().map(|i| miyamoto(algebra, i).map(|_| ())).collect::<Result<Vec<()>>>();
        (spectra, sv, Verdict::from_result(&mv))
    };
    timer.lap("spectra and miyamoto");

    let sigma = if group.order() > SIGMA_MAX_ORDER {
        SigmaSummary {
            verdict: Verdict::not_run(format!(
                "group order {} above the {SIGMA_MAX_ORDER}-element limit",
                group.order()
            )),
            kernel_order: None,
        }
    } else {
        match sigma_homomorphism(algebra, sys, group) {
            Ok(h) => SigmaSummary { verdict: Verdict::pass(), kernel_order: Some(h.kernel.len()) },
            Err(e) => SigmaSummary { verdict: Verdict::fail(e.to_string()), kernel_order: None },
        }
    };
    timer.lap("sigma");

    let pair_types = pair_types(algebra);
    timer.lap("pair types");

    Ok(MatsuoSection {
        alpha: format_rational(&alpha),
        beta: format_rational(algebra.beta()),
        dim: n,
        form_diagonal: format_rational(&(algebra.beta() / int(2))),
        form_adjacent: format_rational(&(&alpha * algebra.beta() / int(8))),
        axioms,
        unity,
        unity_verdict,
        radical_dim: radical.dim(),
        quotient_dim,
        quotient: quotient_verdict,
        positive_definite,
        spectra,
        spectra_verdict,
        miyamoto: miyamoto_verdict,
        sigma,
        pair_types,
    })
}

/// Explicit eigenbases on every axis; exact elimination on the first axis
/// of each component as an independent check of the dimensions.
fn spectra(algebra: &MatsuoAlgebra, comps: &[Vec<usize>]) -> Result<(Vec<SpectrumSummary>, Verdict)> {
    let g = algebra.graph();
    let all: Vec<_> = (0..algebra.dim()).into_par_iter().map(|i| adjoint_spectrum(algebra, i)).collect();
    if let Some(Err(e)) = all.iter().find(|r| r.is_err()) {
        return Ok((Vec::new(), Verdict::fail(e.to_string())));
    }
    let mut out = Vec::new();
    let mut verdict = Verdict::pass();
    for c in comps {
        let i = c[0];
        let Ok(s) = &all[i] else { unreachable!("errors returned above") };
        let d = s.dims();
        let eliminated = [(int(2), d.two), (int(0), d.zero), (algebra.alpha().clone(), d.alpha)]
            .iter()
            .all(|(lambda, dim)| eigenspace_dimension(algebra, i, lambda) == *dim);
        if !eliminated || d.two != 1 {
            verdict = Verdict::fail(format!("eigenspace dimensions of ad x^{i} disagree with elimination"));
        }
        out.push(SpectrumSummary {
            axis: i,
            eigenvalues: s.eigenvalues().iter().map(format_rational).collect(),
            dim_two: d.two,
            dim_zero: d.zero,
            dim_alpha: d.alpha,
            valency: g.degree(i),
        });
    }
    Ok((out, verdict))
}

fn pair_types(algebra: &MatsuoAlgebra) -> PairTypeSummary {
    let half = fischer_lab::rational::rat(1, 2);
    if algebra.alpha() != &half || algebra.beta() != &half {
        return PairTypeSummary {
            verdict: Verdict::not_run("pair types need alpha = beta = 1/2"),
            count_2a: None,
            count_2b: None,
        };
    }
    let n = algebra.dim();
    let types: Result<Vec<PairType>> =
        (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).map(|(i, j)| pair_type(algebra, i, j)).collect();
    match types {
        Ok(ts) => PairTypeSummary {
            verdict: Verdict::pass(),
            count_2a: Some(ts.iter().filter(|t| **t == PairType::TwoA).count()),
            count_2b: Some(ts.iter().filter(|t| **t == PairType::TwoB).count()),
        },
        Err(e) => PairTypeSummary { verdict: Verdict::fail(e.to_string()), count_2a: None, count_2b: None },
    }
}

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

fn write_exports<E: GroupElement>(
    args: &AnalyzeArgs,
    sys: &TranspositionSystem<E>,
    algebra: &MatsuoAlgebra,
) -> Result<()> {
    if let Some(path) = &args.dot {
        fs::write(path, sys.graph().to_dot())?;
    }
    if let Some(path) = &args.gram {
        let gram = algebra.gram_matrix();
        let rows: Vec<Vec<String>> =
            (0..gram.rows()).map(|r| gram.row(r).iter().map(format_rational).collect()).collect();
        let text = if is_json(path) {
            crate::report::canonical_json(&rows)?
        } else {
            rows.iter().map(|r| r.join(",") + "\n").collect()
        };
        fs::write(path, text)?;
    }
    if let Some(path) = &args.structure {
        let sc = algebra.structure_constants();
        let text = if is_json(path) {
            let rows: Vec<(usize, usize, usize, String)> =
                sc.iter().map(|(i, j, k, c)| (*i, *j, *k, format_rational(c))).collect();
            crate::report::canonical_json(&rows)?
        } else {
            let mut s = String::from("i,j,k,coefficient\n");
            for (i, j, k, c) in &sc {
                s.push_str(&format!("{i},{j},{k},{}\n", format_rational(c)));
            }
            s
        };
        fs::write(path, text)?;
    }
    Ok(())
}

pub fn render_text(r: &AnalysisReport) -> String {
    let f = &r.fischer;
    let m = &r.matsuo;
    let mut s = String::new();
    let mut line = |text: String| {
        s.push_str(&text);
        s.push('\n');
    };
    line(format!("descriptor      {}", r.descriptor));
    line(format!("group order     {} (center {})", r.group.order, r.group.center_order));
    line(format!("|I|             {}", f.transpositions));
    for c in &f.components {
        line(format!("component       first {} size {} k {}", c.first, c.size, c.valency));
    }
    line(format!("type            {}", f.symplectic_type));
    if let Some(w) = f.h_triple {
        line(format!(
            "H-triple        ({}, {}, {}) subgroup order {} center {}",
            w[0],
            w[1],
            w[2],
            f.h_subgroup_order.map_or("?".into(), |o| o.to_string()),
            f.h_center_order.map_or("?".into(), |o| o.to_string()),
        ));
    } else {
        line("H-triple        none".into());
    }
    line(format!("alpha, beta     {}, {}", plain(&m.alpha), plain(&m.beta)));
    line(format!(
        "form            diagonal {} adjacent {}",
        plain(&m.form_diagonal),
        plain(&m.form_adjacent)
    ));
    for u in &m.unity {
        line(format!(
            "unity           component {} k {} coefficient {}",
            u.component,
            u.valency,
            u.coefficient.as_deref().map_or("none", plain)
        ));
    }
    line(format!(
        "radical         dim {} quotient dim {} positive definite {}",
        m.radical_dim, m.quotient_dim, m.positive_definite
    ));
    for sp in &m.spectra {
        line(format!(
            "ad x^{:<10} eigenvalues {} dims 2:{} 0:{} alpha:{}",
            sp.axis,
            sp.eigenvalues.iter().map(|e| plain(e)).collect::<Vec<_>>().join(" "),
            sp.dim_two,
            sp.dim_zero,
            sp.dim_alpha
        ));
    }
    if let Some(k) = m.sigma.kernel_order {
        line(format!("ker sigma       order {k}"));
    }
    if let (Some(a), Some(b)) = (m.pair_types.count_2a, m.pair_types.count_2b) {
        line(format!("pair types      2A {a} 2B {b}"));
    }
    for (name, v) in r.verdicts() {
        match &v.reason {
            Some(why) => line(format!("check {name:<20} {} ({why})", v.label())),
            None => line(format!("check {name:<20} {}", v.label())),
        }
    }
    s
}
