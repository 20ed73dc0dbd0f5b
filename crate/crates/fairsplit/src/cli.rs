//! Command-line front end over the document formats in [`crate::io`].
//!
//! Subcommands: `gen`, `reduce`, `solve`, `verify`, `demo-pipeline`. Exit
//! codes are a stable contract: 0 success, 1 verification failure, 2 usage
//! or format error, 3 bound refusal, 4 oracle violation. Diagnostics go to
//! stderr; command output (summaries, verdicts) goes to stdout.

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::io::{
    self, ContextDocument, InstanceBody, InstanceDocument, Provenance, SolutionBody,
    SolutionDocument,
};
use crate::measures::{conhalv_violation, verify_conhalv};
use crate::problems::{
    fisc_violation, fsplitc_violation, fsplitp_violation, otucker_violation, schrijver_violation,
    verify_fisc, verify_fsplitc, verify_fsplitp, verify_otucker, verify_schrijver,
};
use crate::rational::{ratio, Rational};
use crate::reductions::{
    conhalv_backmap, conhalv_to_fsplitp, fisc_backmap_to_fsplitp, fisc_to_fsplitc,
    fisc_to_schrijver, fsplitc_backmap_to_fisc, fsplitc_to_otucker, fsplitp_to_fisc,
    fsplitp_to_fsplitc, otucker_backmap_to_fsplitc, otucker_backmap_to_schrijver,
    schrijver_backmap_to_fisc, schrijver_to_otucker,
};
use crate::solvers::{
    brute_fisc, brute_fsplitc, brute_fsplitp, brute_otucker, brute_schrijver, generate_instance,
    pipeline_solve_conhalv, pipeline_solve_fisc, GenKind, Generated, PipelineRoute, SolverLimits,
};

/// Parses arguments from the process environment, runs one command, and
/// returns the exit code for `main` to pass to the OS.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version are not errors; clap marks real parse
            // failures for stderr.
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BoundExceeded { .. } => 3,
        Error::OracleViolation { .. } => 4,
        _ => 2,
    }
}

#[derive(Parser)]
#[command(
    name = "fairsplit",
    version,
    about = "Fair splits of partitioned cycles and paths: generate, reduce, solve, verify"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Write a seeded pseudo-random instance as canonical JSON.
    Gen {
        /// Instance family.
        #[arg(value_enum)]
        kind: KindArg,
        /// Vertex count (fisc, fsplitc, fsplitp, all-singleton, single-part).
        #[arg(long)]
        n: Option<usize>,
        /// Part count (fisc, fsplitc, fsplitp).
        #[arg(long)]
        m: Option<usize>,
        /// Triple count (cycle-plus-triangles).
        #[arg(long)]
        t: Option<usize>,
        /// Measure count (conhalv).
        #[arg(long)]
        measures: Option<usize>,
        /// Blocks per measure (conhalv).
        #[arg(long)]
        blocks: Option<usize>,
        /// Tolerance as an exact fraction "p/q" (conhalv).
        #[arg(long)]
        eps: Option<String>,
        /// RNG seed; the same seed always yields the same file.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file.
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply one reduction link to an instance file.
    Reduce {
        /// Which link of the chain.
        #[arg(value_enum)]
        name: ReductionArg,
        /// Source instance file; its kind must match the reduction.
        input: PathBuf,
        /// Target instance file to write.
        #[arg(long)]
        out: PathBuf,
        /// Back-map context file to write; required by conhalv-to-fsplitp,
        /// fisc-to-fsplitc, and fisc-to-schrijver, rejected elsewhere.
        #[arg(long)]
        ctx: Option<PathBuf>,
    },
    /// Solve an instance file exhaustively and write the verified solution.
    Solve {
        input: PathBuf,
        /// Solution file to write.
        #[arg(long)]
        out: PathBuf,
        /// For fisc instances only: solve through the reduction chain
        /// instead of directly.
        #[arg(long, value_enum)]
        route: Option<RouteArg>,
        /// Cap on the instance size (vertices, sign-vector dimension, or
        /// discretized path length, per kind); larger inputs exit 3.
        #[arg(long)]
        max_n: Option<usize>,
        /// Tolerance as "p/q"; required by fsplitc and fsplitp, rejected
        /// elsewhere (conhalv instances carry their own).
        #[arg(long)]
        eps: Option<String>,
    },
    /// Check a solution file against its instance file.
    Verify {
        instance: PathBuf,
        solution: PathBuf,
        /// Tolerance as "p/q"; required by fsplitc and fsplitp, rejected
        /// elsewhere.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Run the reduction chain end to end from a consensus-halving instance,
    /// printing every intermediate verification.
    DemoPipeline {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Directory to also write every intermediate document into.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Fisc,
    Fsplitc,
    Fsplitp,
    Conhalv,
    CyclePlusTriangles,
    AllSingleton,
    SinglePart,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReductionArg {
    #[value(name = "conhalv-to-fsplitp")]
    ConhalvToFsplitp,
    #[value(name = "fsplitp-to-fisc")]
    FsplitpToFisc,
    #[value(name = "fisc-to-fsplitc")]
    FiscToFsplitc,
    #[value(name = "fsplitp-to-fsplitc")]
    FsplitpToFsplitc,
    #[value(name = "fisc-to-schrijver")]
    FiscToSchrijver,
    #[value(name = "schrijver-to-otucker")]
    SchrijverToOtucker,
    #[value(name = "fsplitc-to-otucker")]
    FsplitcToOtucker,
}

impl ReductionArg {
    fn name(self) -> &'static str {
        match self {
            ReductionArg::ConhalvToFsplitp => "conhalv-to-fsplitp",
            ReductionArg::FsplitpToFisc => "fsplitp-to-fisc",
            ReductionArg::FiscToFsplitc => "fisc-to-fsplitc",
            ReductionArg::FsplitpToFsplitc => "fsplitp-to-fsplitc",
            ReductionArg::FiscToSchrijver => "fisc-to-schrijver",
            ReductionArg::SchrijverToOtucker => "schrijver-to-otucker",
            ReductionArg::FsplitcToOtucker => "fsplitc-to-otucker",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum RouteArg {
    #[value(name = "via_schrijver")]
    ViaSchrijver,
    #[value(name = "via_otucker")]
    ViaOtucker,
}

impl From<RouteArg> for PipelineRoute {
    fn from(r: RouteArg) -> Self {
        match r {
            RouteArg::ViaSchrijver => PipelineRoute::ViaSchrijver,
            RouteArg::ViaOtucker => PipelineRoute::ViaOtucker,
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<i32> {
    match cmd {
        Cmd::Gen {
            kind,
            n,
            m,
            t,
            measures,
            blocks,
            eps,
            seed,
            out,
        } => cmd_gen(kind, n, m, t, measures, blocks, eps, seed, &out),
        Cmd::Reduce {
            name,
            input,
            out,
            ctx,
        } => cmd_reduce(name, &input, &out, ctx.as_deref()),
        Cmd::Solve {
            input,
            out,
            route,
            max_n,
            eps,
        } => cmd_solve(&input, &out, route, max_n, eps.as_deref()),
        Cmd::Verify {
            instance,
            solution,
            eps,
        } => cmd_verify(&instance, &solution, eps.as_deref()),
        Cmd::DemoPipeline { seed, out } => cmd_demo_pipeline(seed, out),
    }
}

fn parse_eps(s: &str) -> Result<Rational> {
    s.parse()
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    kind: KindArg,
    n: Option<usize>,
    m: Option<usize>,
    t: Option<usize>,
    measures: Option<usize>,
    blocks: Option<usize>,
    eps: Option<String>,
    seed: u64,
    out: &Path,
) -> Result<i32> {
    fn need(v: Option<usize>, family: &str, flag: &str) -> Result<usize> {
        v.ok_or_else(|| Error::usage(format!("gen {family} needs --{flag}")))
    }
    let gk = match kind {
        KindArg::Fisc => GenKind::Fisc {
            n: need(n, "fisc", "n")?,
            m: need(m, "fisc", "m")?,
        },
        KindArg::Fsplitc => GenKind::FsplitC {
            n: need(n, "fsplitc", "n")?,
            m: need(m, "fsplitc", "m")?,
        },
        KindArg::Fsplitp => GenKind::FsplitP {
            n: need(n, "fsplitp", "n")?,
            m: need(m, "fsplitp", "m")?,
        },
        KindArg::Conhalv => GenKind::ConHalv {
            measures: need(measures, "conhalv", "measures")?,
            blocks: need(blocks, "conhalv", "blocks")?,
            eps: parse_eps(
                eps.as_deref()
                    .ok_or_else(|| Error::usage("gen conhalv needs --eps p/q"))?,
            )?,
        },
        KindArg::CyclePlusTriangles => GenKind::CyclePlusTriangles {
            t: need(t, "cycle-plus-triangles", "t")?,
        },
        KindArg::AllSingleton => GenKind::AllSingleton {
            n: need(n, "all-singleton", "n")?,
        },
        KindArg::SinglePart => GenKind::SinglePart {
            n: need(n, "single-part", "n")?,
        },
    };
    let body = InstanceBody::from(generate_instance(&gk, seed)?);
    let kind_tag = body.kind();
    io::write_json(out, &InstanceDocument::new(body))?;
    println!("wrote {kind_tag} instance (seed {seed}) to {}", out.display());
    Ok(0)
}

fn cmd_reduce(name: ReductionArg, input: &Path, out: &Path, ctx: Option<&Path>) -> Result<i32> {
    let doc = io::read_instance(input)?;
    let got = doc.body.kind();
    let mismatch =
        |want: &str| Error::usage(format!("{} expects a {want} instance, got {got}", name.name()));
    let want_ctx = || {
        ctx.ok_or_else(|| {
            Error::usage(format!(
                "{} emits a back-map context; pass --ctx FILE",
                name.name()
            ))
        })
    };
    let no_ctx = || {
        if ctx.is_some() {
            return Err(Error::usage(format!(
                "{} produces no back-map context; drop --ctx",
                name.name()
            )));
        }
        Ok(())
    };
    let target = match (name, doc.body) {
        (ReductionArg::ConhalvToFsplitp, InstanceBody::Conhalv(inst)) => {
            let (path, dctx) = conhalv_to_fsplitp(&inst)?;
            io::write_json(want_ctx()?, &ContextDocument::Discretization(dctx))?;
            InstanceBody::Fsplitp(path)
        }
        (ReductionArg::ConhalvToFsplitp, _) => return Err(mismatch("conhalv")),
        (ReductionArg::FsplitpToFisc, InstanceBody::Fsplitp(inst)) => {
            no_ctx()?;
            InstanceBody::Fisc(fsplitp_to_fisc(&inst)?)
        }
        (ReductionArg::FsplitpToFisc, _) => return Err(mismatch("fsplitp")),
        (ReductionArg::FiscToFsplitc, InstanceBody::Fisc(inst)) => {
            let (cycle, added) = fisc_to_fsplitc(&inst)?;
            io::write_json(
                want_ctx()?,
                &ContextDocument::AddedVertex {
                    added_vertex: added,
                },
            )?;
            InstanceBody::Fsplitc(cycle)
        }
        (ReductionArg::FiscToFsplitc, _) => return Err(mismatch("fisc")),
        (ReductionArg::FsplitpToFsplitc, InstanceBody::Fsplitp(inst)) => {
            no_ctx()?;
            InstanceBody::Fsplitc(fsplitp_to_fsplitc(&inst)?)
        }
        (ReductionArg::FsplitpToFsplitc, _) => return Err(mismatch("fsplitp")),
        (ReductionArg::FiscToSchrijver, InstanceBody::Fisc(inst)) => {
            let (sch, rctx) = fisc_to_schrijver(&inst)?;
            io::write_json(want_ctx()?, &ContextDocument::Relabel(rctx))?;
            InstanceBody::Schrijver(sch)
        }
        (ReductionArg::FiscToSchrijver, _) => return Err(mismatch("fisc")),
        (ReductionArg::SchrijverToOtucker, InstanceBody::Schrijver(inst)) => {
            no_ctx()?;
            InstanceBody::Otucker(schrijver_to_otucker(&inst)?)
        }
        (ReductionArg::SchrijverToOtucker, _) => return Err(mismatch("schrijver")),
        (ReductionArg::FsplitcToOtucker, InstanceBody::Fsplitc(inst)) => {
            no_ctx()?;
            InstanceBody::Otucker(fsplitc_to_otucker(&inst)?)
        }
        (ReductionArg::FsplitcToOtucker, _) => return Err(mismatch("fsplitc")),
    };
    let kind_tag = target.kind();
    io::write_json(out, &InstanceDocument::new(target))?;
    println!(
        "reduced {got} to {kind_tag}; instance written to {}",
        out.display()
    );
    Ok(0)
}

fn cmd_solve(
    input: &Path,
    out: &Path,
    route: Option<RouteArg>,
    max_n: Option<usize>,
    eps: Option<&str>,
) -> Result<i32> {
    let doc = io::read_instance(input)?;
    let kind = doc.body.kind();
    if route.is_some() && !matches!(doc.body, InstanceBody::Fisc(_)) {
        return Err(Error::usage(format!(
            "--route only applies to fisc instances, not {kind}"
        )));
    }
    let needs_eps = matches!(
        doc.body,
        InstanceBody::Fsplitc(_) | InstanceBody::Fsplitp(_)
    );
    if eps.is_some() && !needs_eps {
        return Err(Error::usage(format!(
            "--eps does not apply to {kind} instances"
        )));
    }
    let eps = match eps {
        Some(s) => Some(parse_eps(s)?),
        None if needs_eps => {
            return Err(Error::usage(format!(
                "solving a {kind} instance needs --eps p/q"
            )))
        }
        None => None,
    };

    let mut limits = SolverLimits::default();
    if let Some(cap) = max_n {
        match &doc.body {
            InstanceBody::Fisc(_) => limits.fisc_max_n = cap,
            InstanceBody::Fsplitc(_) | InstanceBody::Fsplitp(_) => limits.fsplit_max_n = cap,
            InstanceBody::Conhalv(_) => limits.conhalv_path_max_n = cap,
            InstanceBody::Otucker(_) => limits.otucker_max_n = cap,
            InstanceBody::Schrijver(_) => {}
        }
    }

    let (body, provenance) = match doc.body {
        InstanceBody::Fisc(inst) => match route {
            None => {
                let report = brute_fisc(&inst, &limits)?;
                println!(
                    "fair independent set {} ({} nodes)",
                    report.solution, report.nodes_explored
                );
                (
                    SolutionBody::Fisc {
                        vertices: report.solution,
                    },
                    Provenance {
                        solver: "brute_fisc".into(),
                        route: None,
                        nodes_explored: report.nodes_explored,
                    },
                )
            }
            Some(r) => {
                let report = pipeline_solve_fisc(&inst, r.into(), &limits)?;
                println!(
                    "fair independent set {} ({} nodes)",
                    report.solution, report.nodes_explored
                );
                (
                    SolutionBody::Fisc {
                        vertices: report.solution,
                    },
                    Provenance {
                        solver: "pipeline_solve_fisc".into(),
                        route: Some(r.into()),
                        nodes_explored: report.nodes_explored,
                    },
                )
            }
        },
        InstanceBody::Fsplitc(inst) => {
            let eps = eps.expect("checked above");
            let report = brute_fsplitc(&inst, &eps, &limits)?;
            println!(
                "split ({:?}, {:?}) ({} nodes)",
                report.solution.s1, report.solution.s2, report.nodes_explored
            );
            (
                SolutionBody::Fsplitc(report.solution),
                Provenance {
                    solver: "brute_fsplitc".into(),
                    route: None,
                    nodes_explored: report.nodes_explored,
                },
            )
        }
        InstanceBody::Fsplitp(inst) => {
            let eps = eps.expect("checked above");
            let report = brute_fsplitp(&inst, &eps, &limits)?;
            println!(
                "split ({:?}, {:?}) ({} nodes)",
                report.solution.s1, report.solution.s2, report.nodes_explored
            );
            (
                SolutionBody::Fsplitp(report.solution),
                Provenance {
                    solver: "brute_fsplitp".into(),
                    route: None,
                    nodes_explored: report.nodes_explored,
                },
            )
        }
        InstanceBody::Conhalv(inst) => {
            let report = pipeline_solve_conhalv(&inst, &limits)?;
            println!(
                "halving with {} cuts (budget {}, {} nodes)",
                report.solution.cuts().len(),
                inst.cut_budget(),
                report.nodes_explored
            );
            (
                SolutionBody::Conhalv(report.solution),
                Provenance {
                    solver: "pipeline_solve_conhalv".into(),
                    route: None,
                    nodes_explored: report.nodes_explored,
                },
            )
        }
        InstanceBody::Schrijver(inst) => {
            if let Some(cap) = max_n {
                if inst.n() > cap {
                    return Err(Error::BoundExceeded {
                        what: "stable-set ground size",
                        actual: inst.n(),
                        limit: cap,
                    });
                }
            }
            let report = brute_schrijver(&inst, &limits)?;
            let (s1, s2) = report.solution;
            println!(
                "monochromatic edge ({s1}, {s2}) ({} nodes)",
                report.nodes_explored
            );
            (
                SolutionBody::Schrijver { s1, s2 },
                Provenance {
                    solver: "brute_schrijver".into(),
                    route: None,
                    nodes_explored: report.nodes_explored,
                },
            )
        }
        InstanceBody::Otucker(inst) => {
            let report = brute_otucker(&inst, &limits)?;
            let (x, y) = report.solution;
            println!(
                "complementary pair x={x}, y={y} ({} nodes)",
                report.nodes_explored
            );
            (
                SolutionBody::Otucker { x, y },
                Provenance {
                    solver: "brute_otucker".into(),
                    route: None,
                    nodes_explored: report.nodes_explored,
                },
            )
        }
    };
    io::write_json(out, &SolutionDocument::new(body, Some(provenance)))?;
    println!("solution written to {}", out.display());
    Ok(0)
}

fn cmd_verify(instance: &Path, solution: &Path, eps: Option<&str>) -> Result<i32> {
    let idoc = io::read_instance(instance)?;
    let sdoc = io::read_solution(solution)?;
    let ikind = idoc.body.kind();
    let skind = sdoc.body.kind();
    let needs_eps = matches!(
        idoc.body,
        InstanceBody::Fsplitc(_) | InstanceBody::Fsplitp(_)
    );
    if eps.is_some() && !needs_eps {
        return Err(Error::usage(format!(
            "--eps does not apply to {ikind} instances"
        )));
    }
    let need_eps = || -> Result<Rational> {
        parse_eps(eps.ok_or_else(|| {
            Error::usage(format!("verifying a {ikind} solution needs --eps p/q"))
        })?)
    };
    let violation = match (idoc.body, sdoc.body) {
        (InstanceBody::Fisc(i), SolutionBody::Fisc { vertices }) => fisc_violation(&i, &vertices)?,
        (InstanceBody::Fsplitc(i), SolutionBody::Fsplitc(sol)) => {
            fsplitc_violation(&i, &sol, &need_eps()?)?
        }
        (InstanceBody::Fsplitp(i), SolutionBody::Fsplitp(sol)) => {
            fsplitp_violation(&i, &sol, &need_eps()?)?
        }
        (InstanceBody::Conhalv(i), SolutionBody::Conhalv(sol)) => conhalv_violation(&i, &sol)?,
        (InstanceBody::Schrijver(i), SolutionBody::Schrijver { s1, s2 }) => {
            schrijver_violation(&i, &s1, &s2)?
        }
        (InstanceBody::Otucker(i), SolutionBody::Otucker { x, y }) => {
            otucker_violation(&i, &x, &y)?
        }
        _ => {
            return Err(Error::usage(format!(
                "instance kind {ikind} does not match solution kind {skind}"
            )))
        }
    };
    match violation {
        None => {
            println!("ok: {ikind} solution verifies");
            Ok(0)
        }
        Some(clause) => {
            println!("verification failed: {clause}");
            Ok(1)
        }
    }
}

/// Optionally mirrors every intermediate document of the demo into a
/// directory.
struct Saver {
    dir: Option<PathBuf>,
}

impl Saver {
    fn new(dir: Option<PathBuf>) -> Result<Self> {
        if let Some(d) = &dir {
            std::fs::create_dir_all(d)?;
        }
        Ok(Saver { dir })
    }

    fn save<T: Serialize>(&self, stem: &str, value: &T) -> Result<()> {
        if let Some(d) = &self.dir {
            let path = d.join(format!("{stem}.json"));
            io::write_json(&path, value)?;
            println!("  [wrote {}]", path.display());
        }
        Ok(())
    }
}

/// Stage 1 runs consensus halving at full scale: discretize, split the path,
/// map the split back to cuts. The discretized path is far too long for the
/// exhaustive solvers further down the chain, so stage 2 reruns every deeper
/// link on a desk-scale companion instance instead of pretending otherwise.
fn cmd_demo_pipeline(seed: u64, out: Option<PathBuf>) -> Result<i32> {
    let limits = SolverLimits::default();
    let saver = Saver::new(out)?;
    let mut all_ok = true;
    let check = |line: &str, ok: bool, all_ok: &mut bool| {
        println!("{line}: {}", if ok { "verified" } else { "FAILED" });
        *all_ok &= ok;
    };

    println!("== stage 1: consensus halving, full scale ==");
    let kind = GenKind::ConHalv {
        measures: 2,
        blocks: 2,
        eps: ratio(1, 2),
    };
    let Generated::ConHalv(conhalv) = generate_instance(&kind, seed)? else {
        return Err(Error::inconsistent("conhalv generator changed family"));
    };
    println!(
        "conhalv instance: {} measures, eps {}, cut budget {} (seed {seed})",
        conhalv.m(),
        conhalv.eps(),
        conhalv.cut_budget()
    );
    saver.save(
        "01-conhalv-instance",
        &InstanceDocument::new(InstanceBody::Conhalv(conhalv.clone())),
    )?;

    let (path, dctx) = conhalv_to_fsplitp(&conhalv)?;
    println!(
        "conhalv-to-fsplitp: path with n={}, m={}, delta {}",
        path.n(),
        path.m(),
        dctx.delta
    );
    saver.save(
        "02-fsplitp-instance",
        &InstanceDocument::new(InstanceBody::Fsplitp(path.clone())),
    )?;
    saver.save(
        "02-fsplitp-context",
        &ContextDocument::Discretization(dctx.clone()),
    )?;

    let quarter = conhalv.eps() / &Rational::from_int(4);
    let inner = SolverLimits {
        fsplit_max_n: limits.conhalv_path_max_n,
        ..limits
    };
    let split = brute_fsplitp(&path, &quarter, &inner)?;
    check(
        &format!(
            "brute_fsplitp at eps/4 = {quarter}: |S1|={}, |S2|={} ({} nodes)",
            split.solution.s1.len(),
            split.solution.s2.len(),
            split.nodes_explored
        ),
        verify_fsplitp(&path, &split.solution, &quarter)?,
        &mut all_ok,
    );

    let cuts = conhalv_backmap(&dctx, &split.solution)?;
    for (i, d) in conhalv.measures().iter().enumerate() {
        let (plus, minus) = cuts.side_masses(d)?;
        println!(
            "  measure {}: |mu(I+) - mu(I-)| = {}",
            i + 1,
            (plus - minus).abs()
        );
    }
    check(
        &format!(
            "conhalv_backmap: {} cuts within budget {}",
            cuts.cuts().len(),
            conhalv.cut_budget()
        ),
        verify_conhalv(&conhalv, &cuts)?,
        &mut all_ok,
    );
    saver.save(
        "03-conhalv-solution",
        &SolutionDocument::new(SolutionBody::Conhalv(cuts), None),
    )?;

    println!();
    println!(
        "the discretized path (n={}) is beyond the exhaustive caps further down \
         the chain (cycle cap {}, sign-vector cap {}); stage 2 demonstrates the \
         remaining links on a desk-scale companion",
        path.n(),
        limits.fisc_max_n,
        limits.otucker_max_n
    );
    println!("== stage 2: the remaining links, desk scale ==");

    let Generated::FsplitP(small_path) = generate_instance(&GenKind::FsplitP { n: 6, m: 2 }, seed)?
    else {
        return Err(Error::inconsistent("fsplitp generator changed family"));
    };
    println!("companion fsplitp instance: {small_path}");
    saver.save(
        "04-companion-fsplitp",
        &InstanceDocument::new(InstanceBody::Fsplitp(small_path.clone())),
    )?;

    let cycle = fsplitp_to_fisc(&small_path)?;
    println!("fsplitp-to-fisc: {cycle}");
    saver.save(
        "05-companion-fisc",
        &InstanceDocument::new(InstanceBody::Fisc(cycle.clone())),
    )?;
    let direct = brute_fisc(&cycle, &limits)?;
    check(
        &format!("brute_fisc: S = {}", direct.solution),
        verify_fisc(&cycle, &direct.solution)?,
        &mut all_ok,
    );
    let back_split = fisc_backmap_to_fsplitp(&small_path, &direct.solution)?;
    check(
        &format!(
            "fisc_backmap_to_fsplitp at eps = 0: ({:?}, {:?})",
            back_split.s1, back_split.s2
        ),
        verify_fsplitp(&small_path, &back_split, &Rational::zero())?,
        &mut all_ok,
    );

    let (sch, rctx) = fisc_to_schrijver(&cycle)?;
    println!(
        "fisc-to-schrijver: stable {}-subsets of [{}], palette {}",
        sch.k(),
        sch.n(),
        sch.palette()
    );
    saver.save(
        "06-schrijver-instance",
        &InstanceDocument::new(InstanceBody::Schrijver(sch.clone())),
    )?;
    saver.save("06-schrijver-context", &ContextDocument::Relabel(rctx.clone()))?;
    let edge = brute_schrijver(&sch, &limits)?;
    check(
        &format!(
            "brute_schrijver: edge ({}, {})",
            edge.solution.0, edge.solution.1
        ),
        verify_schrijver(&sch, &edge.solution.0, &edge.solution.1)?,
        &mut all_ok,
    );

    let lifted = schrijver_to_otucker(&sch)?;
    println!("schrijver-to-otucker: sign vectors of dimension {}", lifted.n());
    saver.save(
        "07-otucker-instance",
        &InstanceDocument::new(InstanceBody::Otucker(lifted.clone())),
    )?;
    let pair = brute_otucker(&lifted, &limits)?;
    check(
        &format!(
            "brute_otucker: x = {}, y = {}",
            pair.solution.0, pair.solution.1
        ),
        verify_otucker(&lifted, &pair.solution.0, &pair.solution.1)?,
        &mut all_ok,
    );
    let (e1, e2) = otucker_backmap_to_schrijver(&sch, &pair.solution.0, &pair.solution.1)?;
    check(
        &format!("otucker_backmap_to_schrijver: edge ({e1}, {e2})"),
        verify_schrijver(&sch, &e1, &e2)?,
        &mut all_ok,
    );
    let back_fisc = schrijver_backmap_to_fisc(&sch, &rctx, &e1, &e2)?;
    check(
        &format!("schrijver_backmap_to_fisc: S = {back_fisc}"),
        verify_fisc(&cycle, &back_fisc)?,
        &mut all_ok,
    );

    let (split_cycle, added) = fisc_to_fsplitc(&cycle)?;
    println!(
        "fisc-to-fsplitc: {split_cycle} (added vertex: {})",
        match added {
            Some(v) => v.to_string(),
            None => "none".into(),
        }
    );
    saver.save(
        "08-fsplitc-instance",
        &InstanceDocument::new(InstanceBody::Fsplitc(split_cycle.clone())),
    )?;
    let labeled = fsplitc_to_otucker(&split_cycle)?;
    println!("fsplitc-to-otucker: sign vectors of dimension {}", labeled.n());
    let pair2 = brute_otucker(&labeled, &limits)?;
    check(
        &format!(
            "brute_otucker: x = {}, y = {}",
            pair2.solution.0, pair2.solution.1
        ),
        verify_otucker(&labeled, &pair2.solution.0, &pair2.solution.1)?,
        &mut all_ok,
    );
    let split2 = otucker_backmap_to_fsplitc(&split_cycle, &pair2.solution.0, &pair2.solution.1)?;
    check(
        &format!(
            "otucker_backmap_to_fsplitc at eps = 0: ({:?}, {:?})",
            split2.s1, split2.s2
        ),
        verify_fsplitc(&split_cycle, &split2, &Rational::zero())?,
        &mut all_ok,
    );
    let back2 = fsplitc_backmap_to_fisc(added, &split2)?;
    check(
        &format!("fsplitc_backmap_to_fisc: S = {back2}"),
        verify_fisc(&cycle, &back2)?,
        &mut all_ok,
    );

    println!();
    if all_ok {
        println!("every intermediate verification passed");
        Ok(0)
    } else {
        println!("at least one intermediate verification FAILED");
        Ok(1)
    }
}
