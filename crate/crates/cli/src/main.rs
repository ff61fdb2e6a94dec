//! `littleweyl`: compression cones, boundary degenerations and little Weyl groups from the command line.

mod render;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use littleweyl::lie::MLattice;
use littleweyl::limits::limit_along;
use littleweyl::rational::{parse_q, to_qstr};
use littleweyl::report::{run_pipeline, Options, Report};
use littleweyl::spherical::{adaptedness, boundary_degeneration, find_admissible, AdmissibilityReport, AdmissibleMethod};
use littleweyl::verify::{limit_suite, space_suites};
use littleweyl::weyl::LimitMatcher;
use littleweyl::{catalog, Error, Space, SphericalAnalysis};
use serde_json::json;

use render::{element, fields, roots, signs, table, vector, vectors, yes_no};

const EXIT_PARSE: u8 = 1;
const EXIT_NOT_ADAPTED: u8 = 2;
const EXIT_CONTRACT: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "littleweyl", version, about = "Compression cones and little Weyl groups of real spherical spaces")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Global {
    /// Emit JSON instead of tables.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples tried by the admissible-point search.
    #[arg(long, global = true, default_value_t = 10)]
    max_iters: usize,
    /// Lattice modelling the sign characters of M.
    #[arg(long, global = true, value_enum, default_value_t = Lattice::Coroot)]
    m_lattice: Lattice,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lattice {
    Coroot,
    Coweight,
}

impl Global {
    fn options(&self) -> Options {
        let lattice = match self.m_lattice {
            Lattice::Coroot => MLattice::Coroot,
            Lattice::Coweight => MLattice::Coweight,
        };
        Options { seed: self.seed, max_iters: self.max_iters, lattice, ..Options::default() }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: Q, T, S_z, cone, admissible point, W, spherical roots.
    Analyze { space: String },
    /// Limit of h_z along exp(tX).
    Limit {
        space: String,
        /// X in a-coordinates (coroots, then center), e.g. "1,-1/2".
        #[arg(long, allow_hyphen_values = true)]
        direction: String,
    },
    /// Boundary degenerations; lists the faces when no face is given.
    Degenerate {
        space: String,
        /// Face index as listed without this flag.
        #[arg(long)]
        face: Option<usize>,
    },
    /// Search for an admissible point and report every chamber.
    Admissible { space: String },
    /// Run the invariant suites.
    Verify {
        space: Option<String>,
        /// Every catalog entry plus the random limit suite.
        #[arg(long, conflicts_with = "space")]
        all: bool,
        /// Instances for the random limit suite.
        #[arg(long, default_value_t = 200)]
        instances: usize,
    },
    /// List the built-in spaces, or show one.
    Catalog {
        name: Option<String>,
        /// Print the entry as a space file.
        #[arg(long, requires = "name")]
        export: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::NotAdapted(_)) => EXIT_NOT_ADAPTED,
        Some(Error::Contract(_) | Error::Exhausted(_)) => EXIT_CONTRACT,
        _ => EXIT_PARSE,
    }
}

fn run(cli: &Cli) -> anyhow::Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Analyze { space } => analyze(g, space),
        Command::Limit { space, direction } => limit(g, space, direction),
        Command::Degenerate { space, face } => degenerate(g, space, *face),
        Command::Admissible { space } => admissible(g, space),
        Command::Verify { space, all, instances } => verify(g, space.as_deref(), *all, *instances),
        Command::Catalog { name, export } => catalog_cmd(g, name.as_deref(), *export),
    }
}

fn load(source: &str) -> anyhow::Result<Space> {
    Ok(Space::resolve(source)?)
}

fn print_json(v: &impl serde::Serialize) -> anyhow::Result<()> {
    emit(&(serde_json::to_string_pretty(v)? + "\n"))
}

/// Write to stdout; a closed pipe (e.g. `| head`) is not an error.
fn emit(text: &str) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

/// Exit 2 with the reason when the base point is not adapted.
fn require_adapted(g: &Global, space: &Space) -> anyhow::Result<Option<u8>> {
    if let Some(reason) = adaptedness(&space.g, &space.point.h_z)? {
        if g.json {
            print_json(&json!({ "schema_version": littleweyl::schema::SCHEMA_VERSION, "space": space.name, "adapted": false, "reason": reason, "message": reason.to_string() }))?;
        }
        eprintln!("not adapted at the base point: {reason}");
        return Ok(Some(EXIT_NOT_ADAPTED));
    }
    Ok(None)
}

fn analyze(g: &Global, source: &str) -> anyhow::Result<u8> {
    let space = load(source)?;
    if let Some(code) = require_adapted(g, &space)? {
        return Ok(code);
    }
    let opts = g.options();
    let pipeline = run_pipeline(&space, &opts)?;
    let mut report = pipeline.report(&opts)?;
    report.verification = space_suites(&pipeline, &report, opts.seed, opts.lattice);
    if g.json {
        print_json(&report)?;
    } else {
        emit(&analyze_text(&space, &report))?;
    }
    Ok(0)
}

fn weyl_summary(r: &Report) -> String {
    if r.weyl.order == 1 {
        "trivial".into()
    } else {
        format!("order {}, type {}", r.weyl.order, r.weyl.coxeter_type)
    }
}

fn analyze_text(space: &Space, r: &Report) -> String {
    let alg = &r.space.lie_algebra;
    let algebra = alg.cartan_type.clone().unwrap_or_else(|| "custom Cartan matrix".into());
    let center = if alg.center_dim > 0 { format!(" + center of dimension {}", alg.center_dim) } else { String::new() };
    let mut out = fields(&[
        ("space", r.space.name.clone()),
        ("lie algebra", format!("{algebra}{center}, dim {}", r.space.dim)),
        ("adapted", yes_no(r.adapted).into()),
        ("Σ(Q)", roots(&r.q.sigma_q)),
        ("dim l_Q, l_Q,nc, n_Q", format!("{}, {}, {}", r.q.l_q_dim, r.q.l_q_nc_dim, r.q.n_q_dim)),
        ("a_h", vectors(&r.t.a_h)),
        ("S_z", roots(&r.t.s_z)),
        ("compression cone", r.cone.description.clone()),
        ("cone facets (≤ 0)", roots(&r.cone.facets)),
        ("edge a_E", vectors(&r.cone.edge)),
        ("admissible at base point", yes_no(r.admissibility.base_point.admissible).into()),
        ("little Weyl group", weyl_summary(r)),
        ("spherical roots", roots(&r.spherical_roots.roots)),
    ]);
    if !r.t.t.is_empty() {
        out += "\nT_z on n̄_Q\n";
        let rows: Vec<Vec<String>> = r
            .t
            .t
            .iter()
            .map(|e| {
                let supp = e.support.iter().map(|s| match s {
                    littleweyl::spherical::SupportItem::Root(id) => render::root(&space.g.root(*id)),
                    littleweyl::spherical::SupportItem::A => "a".into(),
                });
                vec![format!("-{}", render::root(&e.root)), element(&space.g, &e.image), supp.collect::<Vec<_>>().join(" ")]
            })
            .collect();
        out += &table(&["root", "T_z(X_root)", "support"], &rows);
    }
    if !r.weyl.generators.is_empty() {
        out += "\nwall generators\n";
        let rows: Vec<Vec<String>> = r
            .weyl
            .generators
            .iter()
            .map(|gen| {
                let witness = match &gen.witness {
                    littleweyl::weyl::Witness::Root { root, multiple } => format!("{multiple}·{}", render::root(root)),
                    littleweyl::weyl::Witness::OrthogonalPair { beta, gamma, a_h_vector } => {
                        format!("{} ⊥ {}, a_h ∋ {}", render::root(beta), render::root(gamma), vector(a_h_vector))
                    }
                };
                vec![render::root(&gen.functional), witness, gen.label.clone()]
            })
            .collect();
        out += &table(&["wall functional", "witness", "coset"], &rows);
    }
    out += "\nlimits at the admissible point\n";
    let rows: Vec<Vec<String>> = r
        .weyl
        .limit_matches
        .iter()
        .map(|m| vec![signs(&m.signs), vector(&m.representative), m.label.clone()])
        .collect();
    out += &table(&["chamber", "X", "coset"], &rows);
    out += &fields(&[
        ("wall cosets", r.weyl.labels.join(" ")),
        ("limit cosets", r.weyl.limit_labels.join(" ")),
        ("agreement", yes_no(r.weyl.agreement).into()),
        ("tiling", yes_no(r.weyl.tiling.passes()).into()),
    ]);
    if !r.verification.is_empty() {
        out += "\nverification\n";
        out += &checks_table(&r.verification);
    }
    out
}

fn checks_table(checks: &[littleweyl::report::CheckResult]) -> String {
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![c.suite.clone(), if c.passed { "PASS" } else { "FAIL" }.into(), c.detail.clone()])
        .collect();
    table(&["suite", "result", "detail"], &rows)
}

fn parse_direction(text: &str, dim: usize) -> anyhow::Result<Vec<littleweyl::Q>> {
    let x: Vec<littleweyl::Q> = text
        .split(',')
        .map(|s| parse_q(s.trim()))
        .collect::<Result<_, _>>()
        .with_context(|| format!("direction {text:?}"))?;
    if x.len() != dim {
        return Err(Error::Parse(format!("direction {text:?} has {} coordinates, a has dimension {dim}", x.len())).into());
    }
    Ok(x)
}

fn limit(g: &Global, source: &str, direction: &str) -> anyhow::Result<u8> {
    let space = load(source)?;
    let lie = &space.g;
    let x = parse_direction(direction, lie.a_dim())?;
    let lim = limit_along(lie, &space.point.h_z, &x);
    let a_dim = lim.intersect(&lie.a()).dim();
    let cosets: Vec<String> = match SphericalAnalysis::new(lie, &space.point.h_z) {
        Ok(an) => LimitMatcher::new(lie, &an, g.options().lattice).matches(&lim).into_iter().map(|m| m.label).collect(),
        Err(Error::NotAdapted(_)) => vec![],
        Err(e) => return Err(e.into()),
    };
    let basis: Vec<_> = lim.basis().iter().map(|v| to_qstr(v)).collect();
    if g.json {
        print_json(&json!({
            "space": space.name,
            "direction": to_qstr(&x),
            "limit": basis,
            "dim_limit_cap_a": a_dim,
            "cosets": cosets,
        }))?;
    } else {
        let mut out = fields(&[
            ("space", space.name.clone()),
            ("direction", vector(&to_qstr(&x))),
            ("dim(limit ∩ a)", a_dim.to_string()),
            ("coset", if cosets.is_empty() { "none".into() } else { cosets.join(" ") }),
        ]);
        out += "limit basis\n";
        for v in &basis {
            out += &format!("  {}\n", element(lie, v));
        }
        emit(&out)?;
    }
    Ok(0)
}

fn degenerate(g: &Global, source: &str, face: Option<usize>) -> anyhow::Result<u8> {
    let space = load(source)?;
    if let Some(code) = require_adapted(g, &space)? {
        return Ok(code);
    }
    let lie = &space.g;
    let an = SphericalAnalysis::new(lie, &space.point.h_z)?;
    let cone = an.compression_cone(lie);
    let faces = cone.faces();
    let Some(index) = face else {
        let listing = faces
            .iter()
            .enumerate()
            .map(|(i, f)| {
                let d = boundary_degeneration(lie, &an, f)?;
                Ok((i, f.dimension(), to_rows(f.rays()), d.monoid_generators, d.h_zf.dim()))
            })
            .collect::<littleweyl::Result<Vec<_>>>()?;
        if g.json {
            let v: Vec<_> = listing
                .iter()
                .map(|(i, d, rays, gens, h)| json!({ "index": i, "dim": d, "rays": rays, "monoid_generators": gens, "dim_h_zf": h }))
                .collect();
            print_json(&v)?;
        } else {
            let rows: Vec<Vec<String>> = listing
                .iter()
                .map(|(i, d, rays, gens, h)| vec![i.to_string(), d.to_string(), vectors(rays), roots(gens), h.to_string()])
                .collect();
            emit(&table(&["face", "dim", "rays", "monoid generators", "dim h_z,F"], &rows))?;
        }
        return Ok(0);
    };
    let f = faces
        .get(index)
        .ok_or_else(|| Error::Parse(format!("face {index} out of range (the cone has {} faces)", faces.len())))?;
    let d = boundary_degeneration(lie, &an, f)?;
    let basis: Vec<_> = d.h_zf.basis().iter().map(|v| to_qstr(v)).collect();
    if g.json {
        print_json(&json!({
            "space": space.name,
            "face": index,
            "interior_point": to_qstr(&d.interior_point),
            "monoid_generators": d.monoid_generators,
            "h_zf": basis,
        }))?;
    } else {
        let mut out = fields(&[
            ("space", space.name.clone()),
            ("face", format!("{index} (dim {})", f.dimension())),
            ("interior point", vector(&to_qstr(&d.interior_point))),
            ("monoid generators", roots(&d.monoid_generators)),
            ("dim h_z,F", d.h_zf.dim().to_string()),
        ]);
        out += "h_z,F basis\n";
        for v in &basis {
            out += &format!("  {}\n", element(lie, v));
        }
        emit(&out)?;
    }
    Ok(0)
}

fn to_rows(vs: &[littleweyl::linalg::Vector]) -> Vec<Vec<littleweyl::rational::QStr>> {
    vs.iter().map(|v| to_qstr(v)).collect()
}

fn chamber_table(rep: &AdmissibilityReport) -> String {
    let rows: Vec<Vec<String>> = rep
        .chambers
        .iter()
        .map(|c| vec![signs(&c.signs), vector(&c.representative), c.limit_a_dim.to_string(), yes_no(c.passes).into()])
        .collect();
    table(&["chamber", "X", "dim(limit ∩ a)", "passes"], &rows)
}

fn admissible(g: &Global, source: &str) -> anyhow::Result<u8> {
    let space = load(source)?;
    if let Some(code) = require_adapted(g, &space)? {
        return Ok(code);
    }
    let search = find_admissible(&space.g, &space.point, g.seed, g.max_iters)?;
    if g.json {
        print_json(&json!({
            "space": space.name,
            "method": search.method,
            "attempts": search.attempts,
            "point_word": search.point.word,
            "report": search.report,
        }))?;
    } else {
        let method = match &search.method {
            AdmissibleMethod::Input => "base point".to_string(),
            AdmissibleMethod::Sampled { y } => format!("exp Φ(Y), Y = {}", vector(y)),
            AdmissibleMethod::Fallback { t } => format!("n_t family, t = {t}"),
        };
        let mut out = fields(&[
            ("space", space.name.clone()),
            ("method", method),
            ("attempts", search.attempts.to_string()),
            ("dim a_h", search.report.a_h_dim.to_string()),
        ]);
        out += &chamber_table(&search.report);
        emit(&out)?;
    }
    Ok(0)
}

fn verify(g: &Global, source: Option<&str>, all: bool, instances: usize) -> anyhow::Result<u8> {
    let sources: Vec<String> = match (source, all) {
        (Some(s), _) => vec![s.to_string()],
        (None, true) => catalog::names().into_iter().map(String::from).collect(),
        (None, false) => return Err(Error::Parse("give a space or --all".into()).into()),
    };
    let opts = g.options();
    let mut failed = false;
    let mut json_out = Vec::new();
    for s in &sources {
        let space = load(s)?;
        if let Some(code) = require_adapted(g, &space)? {
            return Ok(code);
        }
        let pipeline = run_pipeline(&space, &opts)?;
        let report = pipeline.report(&opts)?;
        let checks = space_suites(&pipeline, &report, opts.seed, opts.lattice);
        failed |= checks.iter().any(|c| !c.passed);
        if g.json {
            json_out.push(json!({ "space": space.name, "checks": checks }));
        } else {
            emit(&format!("{}\n{}\n", space.name, checks_table(&checks)))?;
        }
    }
    if all {
        let rep = limit_suite(opts.seed, instances, 40.0, 1e-6);
        failed |= !rep.failures.is_empty();
        if g.json {
            json_out.push(json!({
                "space": "random limits",
                "instances": rep.instances,
                "max_distance": rep.max_distance,
                "failures": rep.failures,
            }));
        } else {
            let result = if rep.failures.is_empty() { "PASS" } else { "FAIL" };
            let mut out = format!("random limits: {result} ({} instances, max float distance {:.1e})\n", rep.instances, rep.max_distance);
            for f in &rep.failures {
                out += &format!("  {f}\n");
            }
            emit(&out)?;
        }
    }
    if g.json {
        print_json(&json_out)?;
    }
    Ok(if failed { EXIT_VERIFY } else { 0 })
}

fn catalog_cmd(g: &Global, name: Option<&str>, export: bool) -> anyhow::Result<u8> {
    match name {
        None => {
            let entries = catalog::list_entries();
            if g.json {
                let v: Vec<_> = entries
                    .iter()
                    .map(|e| json!({ "name": e.name, "cartan_type": e.cartan_type, "center_dim": e.center_dim, "description": e.description, "expected": e.expected }))
                    .collect();
                print_json(&v)?;
            } else {
                let rows: Vec<Vec<String>> = entries
                    .iter()
                    .map(|e| {
                        let alg = if e.center_dim > 0 { format!("{}+T{}", e.cartan_type, e.center_dim) } else { e.cartan_type.into() };
                        vec![e.name.into(), alg, e.expected.w_order.to_string(), e.expected.coxeter_type.clone(), e.description.into()]
                    })
                    .collect();
                emit(&table(&["name", "algebra", "|W|", "type", "description"], &rows))?;
            }
        }
        Some(n) => {
            let e = catalog::entry(n)?;
            if export {
                print_json(&littleweyl::schema::export_entry(&e))?;
            } else if g.json {
                print_json(&e.expected)?;
            } else {
                let x = &e.expected;
                emit(&fields(&[
                        ("name", e.name.into()),
                        ("description", e.description.into()),
                        ("quotient", e.quasi_affine_note.into()),
                        ("S_z", roots(&x.s_z)),
                        ("cone facets (≤ 0)", roots(&x.cone_facets)),
                        ("dim a_h, a_E", format!("{}, {}", x.a_h_dim, x.a_e_dim)),
                        ("little Weyl group", format!("order {}, type {}", x.w_order, x.coxeter_type)),
                        ("spherical roots", roots(&x.sigma_z)),
                        ("admissible at base point", yes_no(x.admissible).into()),
                ]))?;
            }
        }
    }
    Ok(0)
}
