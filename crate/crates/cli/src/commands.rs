//! Subcommand definitions and their handlers. Every handler returns a JSON
//! report plus a flag saying whether the checks it ran passed.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use noether_core::character::{subquotient_a, CharacterTriple, TripleJson};
use noether_core::depth::{
    cardinality_and_structure, commensurable, compute_depth, depth_membership, finite_index_test, is_depth,
    DepthCertificate, DepthVerdict, FinitenessCertificate,
};
use noether_core::dual::{all_subgroups, invariant_subgroup_check, FiniteModel, MODEL_CAP};
use noether_core::finite_ring::{FiniteRing, QIdeal};
use noether_core::ideal::{Ideal, IdealJson};
use noether_core::matgroup::normal_form::{normal_form_conjugate, verify, FiniteBackend, IntegerBackend, Mat};
use noether_core::matgroup::predicates::{
    borevich_vavilov, conjugacy_classes, normal_structure, predicate_suite, tits_check,
};
use noether_core::matgroup::{
    center_word, el_generators, generate_subgroup, in_sl, shorten_integer, sl_elements, sl_level, sltil_level,
    units_order_dividing, FMat, FiniteShortener, RMatrix,
};
use noether_core::ring::{Polynomial, Ring};

use crate::config::{Format, Overrides, RunConfig};
use crate::suites::{self, classification_json, fourier_check, induce_report, validation_json, SUITES};

#[derive(Debug, Parser)]
#[command(name = "noether-el", version, about = "Depth ideals, elementary matrix groups and their characters")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Cap on Groebner-basis critical pairs.
    #[arg(long, global = true)]
    pub max_gb_pairs: Option<u64>,
    /// Cap on enumerated group or dual elements.
    #[arg(long, global = true)]
    pub max_elements: Option<usize>,
    /// Degree bound of the depth search.
    #[arg(long, global = true)]
    pub bound: Option<u32>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Tolerance for floating-point checks.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl GlobalArgs {
    pub fn overrides(&self) -> Overrides {
        Overrides {
            max_gb_pairs: self.max_gb_pairs,
            max_elements: self.max_elements,
            bound: self.bound,
            seed: self.seed,
            tol: self.tol,
            format: self.format.map(|f| match f {
                FormatArg::Json => Format::Json,
                FormatArg::Text => Format::Text,
            }),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Finiteness and structure of quotient rings.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Ideal arithmetic over the integers.
    #[command(subcommand)]
    Ideal(IdealCmd),
    /// Depth ideals and maximal finite-index extensions.
    #[command(subcommand)]
    Depth(DepthCmd),
    /// Single matrices and elementary words.
    #[command(subcommand)]
    Mat(MatCmd),
    /// Finite matrix groups.
    #[command(subcommand)]
    Group(GroupCmd),
    /// Invariant measures on finite dual models.
    #[command(subcommand)]
    Measures(MeasuresCmd),
    /// Character tables and character triples.
    #[command(subcommand)]
    Char(CharCmd),
    /// Runs built-in verification suites.
    Selftest {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

#[derive(Debug, Args)]
pub struct IdealFile {
    /// Ideal in JSON interchange form.
    #[arg(long)]
    pub ideal: PathBuf,
}

#[derive(Debug, Args)]
pub struct IdealPair {
    #[arg(long)]
    pub ideal: PathBuf,
    /// Second ideal; it must live in the same ring.
    #[arg(long)]
    pub other: PathBuf,
}

#[derive(Debug, Subcommand)]
pub enum RingCmd {
    /// Decides whether R/I is finite.
    Finite(IdealFile),
    /// Order and invariant factors of a finite R/I.
    Structure(IdealFile),
}

#[derive(Debug, Subcommand)]
pub enum IdealCmd {
    /// Reduced strong Groebner basis.
    Gb(IdealFile),
    Sum(IdealPair),
    Product(IdealPair),
    Intersect(IdealPair),
    /// The colon ideal `ideal : other`.
    Quotient(IdealPair),
    /// The saturation `ideal : other^∞`.
    Saturate(IdealPair),
    Contains {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        element: String,
    },
    Equal(IdealPair),
}

#[derive(Debug, Subcommand)]
pub enum DepthCmd {
    /// The largest ideal containing I with finite quotient over I.
    Compute(IdealFile),
    /// Whether an element lies in mfi(I).
    Member {
        #[arg(long)]
        ideal: PathBuf,
        #[arg(long)]
        element: String,
    },
    IsDepth(IdealFile),
    Commensurable(IdealPair),
}

#[derive(Debug, Args)]
pub struct FiniteRingArgs {
    /// Use Z/n.
    #[arg(long = "mod", conflicts_with = "quotient")]
    pub modulus: Option<u64>,
    /// Use R/K for an ideal K of finite index, given as JSON.
    #[arg(long)]
    pub quotient: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum MatCmd {
    /// Elementary word for the scalar matrix u·Id.
    CenterWord {
        #[command(flatten)]
        ring: FiniteRingArgs,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        unit: i64,
    },
    /// Decomposition of a conjugate of g as h v h' v' n.
    NormalForm {
        /// Matrix as a JSON row-major array, inline or as a file path.
        #[arg(long)]
        matrix: String,
        /// Work over Z/n instead of Z.
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Shortens a unimodular row by the stable-range step.
    Shorten {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        row: Vec<i64>,
        #[arg(long = "mod")]
        modulus: Option<u64>,
    },
    /// Level ideals of SL and SLtil membership.
    Level {
        #[arg(long)]
        matrix: String,
        /// Ring in JSON form; defaults to Z.
        #[arg(long)]
        ring: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
pub enum GroupCmd {
    /// Order of the subgroup generated by a family of elementary matrices.
    Generate {
        #[command(flatten)]
        ring: FiniteRingArgs,
        #[arg(long)]
        d: usize,
        /// `elementary` or `level:k` for the E_ij(k·t).
        #[arg(long, default_value = "elementary")]
        gens: String,
    },
    /// Whether EL_d(I^2) lies in F_d(I).
    Tits(IdealGroupArgs),
    /// Center of EL_d/EL_d(I) against SLtil_d(I).
    Bv(IdealGroupArgs),
    /// Closed-form predicates against brute force.
    Predicates(GroupArgs),
    /// EL-normalized subgroups and their sandwiches.
    NormalStructure(GroupArgs),
    /// Conjugacy class sizes of SL_d.
    Classes(GroupArgs),
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(flatten)]
    pub ring: FiniteRingArgs,
    #[arg(long)]
    pub d: usize,
}

#[derive(Debug, Args)]
pub struct IdealGroupArgs {
    #[command(flatten)]
    pub ring: FiniteRingArgs,
    #[arg(long)]
    pub d: usize,
    /// Generators of the ideal as integers, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub ideal: Vec<i64>,
}

#[derive(Debug, Subcommand)]
pub enum MeasuresCmd {
    /// Parametric measures against the orbit decomposition.
    Classify(GroupArgs),
    /// Every subgroup of Q^d and which ones are invariant.
    Subgroups(GroupArgs),
    /// Transforms of translated Haar measures against the closed form.
    Fourier(GroupArgs),
}

#[derive(Debug, Subcommand)]
pub enum CharCmd {
    /// Character table of SLtil_d(I) ∩ EL_d / EL_d(K) over Z/n.
    Table {
        #[command(flatten)]
        ring: FiniteRingArgs,
        #[arg(long)]
        d: usize,
        /// Generators of the level ideal, comma separated; defaults to the whole ring.
        #[arg(long, value_delimiter = ',')]
        level: Vec<i64>,
    },
    /// Builds a triple over Z with kernel (mod), level (level) and the
    /// orbit of an irreducible character of the given degree.
    Triple {
        #[arg(long = "mod")]
        modulus: i64,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        degree: u64,
        #[arg(long, default_value_t = 1)]
        level: i64,
    },
    Validate {
        #[arg(long)]
        triple: PathBuf,
    },
    /// Trace checks of the induced trace on a word ball.
    Induce {
        #[arg(long)]
        triple: PathBuf,
        #[arg(long, default_value_t = suites::CHARACTER_BALL)]
        ball: usize,
        #[arg(long, default_value_t = suites::CHARACTER_SAMPLE)]
        sample: usize,
    },
}

pub struct Outcome {
    pub report: Value,
    pub passed: bool,
}

fn ok(report: Value) -> Result<Outcome> {
    Ok(Outcome { report, passed: true })
}

fn checked(report: Value, passed: bool) -> Result<Outcome> {
    Ok(Outcome { report, passed })
}

pub fn execute(cmd: &Command, cfg: &RunConfig) -> Result<Outcome> {
    match cmd {
        Command::Ring(c) => ring_cmd(c, cfg),
        Command::Ideal(c) => ideal_cmd(c, cfg),
        Command::Depth(c) => depth_cmd(c, cfg),
        Command::Mat(c) => mat_cmd(c),
        Command::Group(c) => group_cmd(c, cfg),
        Command::Measures(c) => measures_cmd(c, cfg),
        Command::Char(c) => char_cmd(c, cfg),
        Command::Selftest { suite } => selftest(suite, cfg),
    }
}

fn read_text(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_ideal(path: &Path, cfg: &RunConfig) -> Result<Ideal> {
    let j = IdealJson::parse_str(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    let ring = j.ring.to_ring()?.with_limits(cfg.gb_limits());
    Ok(j.to_ideal_in(&ring)?)
}

fn load_pair(p: &IdealPair, cfg: &RunConfig) -> Result<(Ideal, Ideal)> {
    let a = load_ideal(&p.ideal, cfg)?;
    let j = IdealJson::parse_str(&read_text(&p.other)?).with_context(|| format!("parsing {}", p.other.display()))?;
    if j.ring != IdealJson::from_ideal(&a)?.ring {
        bail!("the two ideals live in different rings");
    }
    let b = j.to_ideal_in(a.ring())?;
    Ok((a, b))
}

fn ideal_json(i: &Ideal) -> Result<Value> {
    Ok(serde_json::to_value(IdealJson::from_ideal(i)?)?)
}

fn polys(ring: &Ring, ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| ring.display(p)).collect()
}

fn finiteness_json(c: &FinitenessCertificate, ring: &Ring) -> Value {
    match c {
        FinitenessCertificate::Finite { n, relations, cardinality } => json!({
            "kind": "Finite",
            "integer": n.to_string(),
            "power_relations": relations.iter().map(|r| {
                let x = &ring.names()[r.var];
                format!("{x}^{} - {x}^{}", r.m, r.n)
            }).collect::<Vec<_>>(),
            "cardinality": cardinality.to_string(),
        }),
        FinitenessCertificate::NoIntegerPart => json!({"kind": "NoIntegerPart"}),
        FinitenessCertificate::PositiveDimensional { prime, var } => {
            json!({"kind": "PositiveDimensional", "prime": prime.to_string(), "variable": ring.names()[*var]})
        }
    }
}

fn depth_certificate_json(c: &DepthCertificate) -> Value {
    match c {
        DepthCertificate::FiniteQuotient => json!({"kind": "FiniteQuotient"}),
        DepthCertificate::UnitIdeal => json!({"kind": "UnitIdeal"}),
        DepthCertificate::FreeQuotient => json!({"kind": "FreeQuotient"}),
        DepthCertificate::PrimeField { prime } => json!({"kind": "PrimeField", "prime": prime.to_string()}),
    }
}

fn ring_cmd(c: &RingCmd, cfg: &RunConfig) -> Result<Outcome> {
    match c {
        RingCmd::Finite(f) => {
            let i = load_ideal(&f.ideal, cfg)?;
            let v = finite_index_test(&i)?;
            ok(json!({
                "ideal": i.to_text()?,
                "finite": v.is_finite(),
                "certificate": finiteness_json(&v.certificate, i.ring()),
            }))
        }
        RingCmd::Structure(f) => {
            let i = load_ideal(&f.ideal, cfg)?;
            if !finite_index_test(&i)?.is_finite() {
                bail!("R/I is infinite");
            }
            let (order, g) = cardinality_and_structure(&i)?;
            ok(json!({
                "ideal": i.to_text()?,
                "order": order.to_string(),
                "invariants": g.invariants.iter().map(BigInt::to_string).collect::<Vec<_>>(),
                "generators": polys(i.ring(), &g.generators),
            }))
        }
    }
}

fn ideal_cmd(c: &IdealCmd, cfg: &RunConfig) -> Result<Outcome> {
    let binary = |p: &IdealPair, op: &str, f: &dyn Fn(&Ideal, &Ideal) -> noether_core::Result<Ideal>| -> Result<Outcome> {
        let (a, b) = load_pair(p, cfg)?;
        let r = f(&a, &b)?;
        ok(json!({"operation": op, "left": a.to_text()?, "right": b.to_text()?, "result": r.to_text()?, "ideal": ideal_json(&r)?}))
    };
    match c {
        IdealCmd::Gb(f) => {
            let i = load_ideal(&f.ideal, cfg)?;
            let gb = i.gb()?;
            ok(json!({"ideal": i.to_text()?, "basis": polys(i.ring(), gb.basis())}))
        }
        IdealCmd::Sum(p) => binary(p, "sum", &|a, b| a.sum(b)),
        IdealCmd::Product(p) => binary(p, "product", &|a, b| a.product(b)),
        IdealCmd::Intersect(p) => binary(p, "intersect", &|a, b| a.intersect(b)),
        IdealCmd::Quotient(p) => binary(p, "quotient", &|a, b| a.quotient(b)),
        IdealCmd::Saturate(p) => binary(p, "saturate", &|a, b| a.saturate(b)),
        IdealCmd::Contains { ideal, element } => {
            let i = load_ideal(ideal, cfg)?;
            let p = i.ring().parse(element)?;
            ok(json!({"ideal": i.to_text()?, "element": i.ring().display(&p), "contains": i.contains(&p)?}))
        }
        IdealCmd::Equal(p) => {
            let (a, b) = load_pair(p, cfg)?;
            ok(json!({"left": a.to_text()?, "right": b.to_text()?, "equal": a.equals(&b)?}))
        }
    }
}

fn depth_cmd(c: &DepthCmd, cfg: &RunConfig) -> Result<Outcome> {
    match c {
        DepthCmd::Compute(f) => {
            let i = load_ideal(&f.ideal, cfg)?;
            let d = compute_depth(&i, cfg.depth_bounds())?;
            ok(json!({
                "ideal": i.to_text()?,
                "depth": d.ideal.to_text()?,
                "status": format!("{:?}", d.status),
                "certificate": d.certificate.as_ref().map(depth_certificate_json),
                "witnesses": polys(i.ring(), &d.witnesses),
                "bounds": {"degree": cfg.bound, "coeff": cfg.coeff},
                "result": ideal_json(&d.ideal)?,
            }))
        }
        DepthCmd::Member { ideal, element } => {
            let i = load_ideal(ideal, cfg)?;
            let p = i.ring().parse(element)?;
            ok(json!({"ideal": i.to_text()?, "element": i.ring().display(&p), "in_depth": depth_membership(&p, &i)?}))
        }
        DepthCmd::IsDepth(f) => {
            let i = load_ideal(&f.ideal, cfg)?;
            let v = match is_depth(&i, cfg.depth_bounds())? {
                DepthVerdict::CertifiedYes(c) => json!({"verdict": "CertifiedYes", "certificate": depth_certificate_json(&c)}),
                DepthVerdict::CertifiedNo { witness } => {
                    json!({"verdict": "CertifiedNo", "witness": i.ring().display(&witness)})
                }
                DepthVerdict::BoundedYes => json!({"verdict": "BoundedYes"}),
            };
            ok(json!({"ideal": i.to_text()?, "result": v}))
        }
        DepthCmd::Commensurable(p) => {
            let (a, b) = load_pair(p, cfg)?;
            ok(json!({"left": a.to_text()?, "right": b.to_text()?, "commensurable": commensurable(&a, &b)?}))
        }
    }
}

fn finite_ring(args: &FiniteRingArgs) -> Result<FiniteRing> {
    match (args.modulus, &args.quotient) {
        (Some(n), None) => Ok(FiniteRing::integers_mod(n)?),
        (None, Some(path)) => {
            let j = IdealJson::parse_str(&read_text(path)?)?;
            Ok(FiniteRing::from_ideal(&j.to_ideal()?)?)
        }
        _ => bail!("give exactly one of --mod and --quotient"),
    }
}

/// A matrix given inline as JSON or as a path to a JSON file; entries may be
/// numbers or polynomial strings.
fn matrix_entries(src: &str) -> Result<Vec<Vec<String>>> {
    let text = if Path::new(src).is_file() { read_text(Path::new(src))? } else { src.to_string() };
    let v: Value = serde_json::from_str(&text).context("matrix must be a JSON array of rows")?;
    let rows = v.as_array().ok_or_else(|| anyhow!("matrix must be a JSON array of rows"))?;
    let out: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or_else(|| anyhow!("each row must be an array"))?
                .iter()
                .map(|x| match x {
                    Value::Number(n) => Ok(n.to_string()),
                    Value::String(s) => Ok(s.clone()),
                    _ => bail!("matrix entries must be numbers or strings"),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    if out.is_empty() || out.iter().any(|r| r.len() != out.len()) {
        bail!("matrix must be square and non-empty");
    }
    Ok(out)
}

fn word_json<E>(w: &noether_core::matgroup::ElementaryWord<E>, show: impl Fn(&E) -> String) -> Vec<Value> {
    w.letters.iter().map(|l| json!({"i": l.i + 1, "j": l.j + 1, "r": show(&l.r)})).collect()
}

fn mat_json<E>(m: &Mat<E>, show: impl Fn(&E) -> String) -> Vec<Vec<String>> {
    m.iter().map(|r| r.iter().map(&show).collect()).collect()
}

fn mat_cmd(c: &MatCmd) -> Result<Outcome> {
    match c {
        MatCmd::CenterWord { ring, d, unit } => {
            let q = finite_ring(ring)?;
            let u = q.from_int(*unit);
            if !units_order_dividing(&q, *d as u64).contains(&u) {
                bail!("{} is not a unit with u^{d} = 1", q.display(u));
            }
            let w = center_word(&q, *d, u)?;
            let exact = w.eval(&q, *d)? == FMat::scalar(&q, *d, u);
            checked(
                json!({
                    "ring": q.label(), "d": d, "unit": q.display(u),
                    "letters": w.len(), "word": word_json(&w, |r| q.display(*r)), "exact": exact,
                }),
                exact,
            )
        }
        MatCmd::NormalForm { matrix, modulus } => {
            let entries = matrix_entries(matrix)?;
            match modulus {
                None => {
                    let g: Mat<BigInt> = entries
                        .iter()
                        .map(|r| r.iter().map(|s| s.trim().parse::<BigInt>().context("integer entry expected")).collect())
                        .collect::<Result<_>>()?;
                    let nf = normal_form_conjugate(&IntegerBackend, &g)?;
                    let ok = verify(&IntegerBackend, &g, &nf);
                    let show = |x: &BigInt| x.to_string();
                    checked(
                        json!({
                            "ring": "Z",
                            "conjugator": word_json(&nf.conjugator, show),
                            "h": mat_json(&nf.h, show), "v": mat_json(&nf.v, show),
                            "h_prime": mat_json(&nf.h_prime, show), "v_prime": mat_json(&nf.v_prime, show),
                            "n": mat_json(&nf.n, show), "verified": ok,
                        }),
                        ok,
                    )
                }
                Some(n) => {
                    let q = FiniteRing::integers_mod(*n)?;
                    let g: Mat<u32> = entries
                        .iter()
                        .map(|r| r.iter().map(|s| Ok(q.from_int(s.trim().parse::<i64>().context("integer entry expected")?))).collect())
                        .collect::<Result<_>>()?;
                    let b = FiniteBackend::new(&q);
                    let nf = normal_form_conjugate(&b, &g)?;
                    let ok = verify(&b, &g, &nf);
                    let show = |x: &u32| q.display(*x);
                    checked(
                        json!({
                            "ring": q.label(),
                            "conjugator": word_json(&nf.conjugator, show),
                            "h": mat_json(&nf.h, show), "v": mat_json(&nf.v, show),
                            "h_prime": mat_json(&nf.h_prime, show), "v_prime": mat_json(&nf.v_prime, show),
                            "n": mat_json(&nf.n, show), "verified": ok,
                        }),
                        ok,
                    )
                }
            }
        }
        MatCmd::Shorten { row, modulus } => match modulus {
            None => {
                let v: Vec<BigInt> = row.iter().map(|&x| BigInt::from(x)).collect();
                let s = shorten_integer(&v)?;
                ok(json!({"ring": "Z", "row": row, "shortened": s.iter().map(BigInt::to_string).collect::<Vec<_>>()}))
            }
            Some(n) => {
                let q = FiniteRing::integers_mod(*n)?;
                let v: Vec<_> = row.iter().map(|&x| q.from_int(x)).collect();
                let s = FiniteShortener::new(&q).shorten(&v)?;
                ok(json!({"ring": q.label(), "row": row, "shortened": s.iter().map(|&x| q.display(x)).collect::<Vec<_>>()}))
            }
        },
        MatCmd::Level { matrix, ring } => {
            let r = match ring {
                Some(p) => {
                    let j: noether_core::ideal::RingJson = serde_json::from_str(&read_text(p)?).context("parsing ring")?;
                    j.to_ring()?
                }
                None => Ring::integers(),
            };
            let rows = matrix_entries(matrix)?
                .iter()
                .map(|row| row.iter().map(|s| r.parse(s)).collect::<noether_core::Result<Vec<_>>>())
                .collect::<noether_core::Result<Vec<_>>>()?;
            let g = RMatrix::from_rows(&r, rows)?;
            if !r.eq_elem(&g.det(&r)?, &r.one())? {
                bail!("matrix does not have determinant 1");
            }
            ok(json!({
                "matrix": g.display(&r),
                "sl_level": sl_level(&r, &g)?.to_text()?,
                "sltil_level": sltil_level(&r, &g)?.to_text()?,
            }))
        }
    }
}

fn q_ideal(q: &FiniteRing, gens: &[i64]) -> QIdeal {
    if gens.is_empty() {
        return q.whole();
    }
    let g: Vec<_> = gens.iter().map(|&x| q.from_int(x)).collect();
    q.ideal(&g)
}

fn group_cmd(c: &GroupCmd, cfg: &RunConfig) -> Result<Outcome> {
    let cap = cfg.max_elements;
    match c {
        GroupCmd::Generate { ring, d, gens } => {
            let q = finite_ring(ring)?;
            let (label, values) = match gens.as_str() {
                "elementary" => ("elementary".to_string(), q.whole()),
                other => {
                    let k: i64 = other
                        .strip_prefix("level:")
                        .and_then(|k| k.parse().ok())
                        .ok_or_else(|| anyhow!("--gens must be `elementary` or `level:k`"))?;
                    (format!("level:{k}"), q.ideal(&[q.from_int(k)]))
                }
            };
            let g = noether_core::matgroup::f_subgroup(&q, *d, &values, cap)?;
            let within_level = g.iter().all(|m| in_sl(&q, m, &values));
            ok(json!({
                "ring": q.label(), "d": d, "generators": label, "ideal": values.display(&q),
                "order": g.len(), "inside_congruence_subgroup": within_level,
            }))
        }
        GroupCmd::Tits(a) => {
            let q = finite_ring(&a.ring)?;
            let i = q_ideal(&q, &a.ideal);
            let t = tits_check(&q, a.d, &i, cap)?;
            checked(
                json!({
                    "ring": q.label(), "d": a.d, "ideal": i.display(&q),
                    "el_of_square_order": t.el_square_order, "f_order": t.f_order, "contained": t.contained,
                }),
                t.contained,
            )
        }
        GroupCmd::Bv(a) => {
            let q = finite_ring(&a.ring)?;
            let i = q_ideal(&q, &a.ideal);
            let b = borevich_vavilov(&q, a.d, &i, cap)?;
            checked(
                json!({
                    "ring": q.label(), "d": a.d, "ideal": i.display(&q),
                    "el_order": b.el_order, "el_ideal_order": b.el_ideal_order,
                    "center_preimage_order": b.center_preimage_order, "sltil_order": b.sltil_order, "equal": b.equal,
                }),
                b.equal,
            )
        }
        GroupCmd::Predicates(a) => {
            let q = finite_ring(&a.ring)?;
            let rows = predicate_suite(&q, a.d)?;
            let passed = rows.iter().all(|r| r.mismatches == 0);
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| json!({"predicate": r.name, "checked": r.checked, "mismatches": r.mismatches}))
                .collect();
            checked(json!({"ring": q.label(), "d": a.d, "predicates": rows}), passed)
        }
        GroupCmd::NormalStructure(a) => {
            let q = finite_ring(&a.ring)?;
            let levels = normal_structure(&q, a.d, cap)?;
            let passed = levels.iter().all(|l| l.sandwiched);
            let rows: Vec<Value> = levels
                .iter()
                .map(|l| {
                    json!({"order": l.order, "level": l.level, "lower_order": l.lower_order,
                           "upper_order": l.upper_order, "sandwiched": l.sandwiched})
                })
                .collect();
            checked(json!({"ring": q.label(), "d": a.d, "subgroups": rows}), passed)
        }
        GroupCmd::Classes(a) => {
            let q = finite_ring(&a.ring)?;
            let sl = sl_elements(&q, a.d, cap)?;
            let gens = el_generators(&q, a.d);
            let el = generate_subgroup(&q, a.d, &gens, cap)?;
            let classes = conjugacy_classes(&q, &sl, &gens)?;
            let mut sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
            sizes.sort_unstable();
            ok(json!({
                "ring": q.label(), "d": a.d, "sl_order": sl.len(), "el_order": el.len(),
                "classes": sizes.len(), "class_sizes": sizes,
            }))
        }
    }
}

fn measures_cmd(c: &MeasuresCmd, cfg: &RunConfig) -> Result<Outcome> {
    let cap = MODEL_CAP.min(cfg.max_elements);
    match c {
        MeasuresCmd::Classify(a) => {
            let q = finite_ring(&a.ring)?;
            let m = FiniteModel::build(&q, a.d, cap)?;
            let report = classification_json(&m)?;
            let passed = report["bijection"] == json!(true);
            checked(report, passed)
        }
        MeasuresCmd::Subgroups(a) => {
            let q = finite_ring(&a.ring)?;
            let m = FiniteModel::build(&q, a.d, cap)?;
            let subs = all_subgroups(&m, cap)?;
            let mut rows = Vec::new();
            let mut passed = true;
            for s in &subs {
                let c = invariant_subgroup_check(&m, s);
                passed &= c.invariant == c.equals_ideal_power;
                if c.invariant {
                    rows.push(json!({"order": s.len(), "ideal": c.ideal.display(&q), "equals_ideal_power": c.equals_ideal_power}));
                }
            }
            checked(json!({"ring": q.label(), "d": a.d, "subgroups": subs.len(), "invariant": rows}), passed)
        }
        MeasuresCmd::Fourier(a) => {
            let q = finite_ring(&a.ring)?;
            let report = fourier_check(&q, a.d, cfg.tol_or(suites::FOURIER_TOL), cfg.max_elements)?;
            let passed = report["passed"] == json!(true);
            checked(report, passed)
        }
    }
}

fn load_triple(path: &Path) -> Result<CharacterTriple> {
    let j = TripleJson::parse_str(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))?;
    Ok(j.to_triple()?)
}

fn complex_json(z: num_complex::Complex64) -> Value {
    json!([z.re, z.im])
}

fn char_cmd(c: &CharCmd, cfg: &RunConfig) -> Result<Outcome> {
    match c {
        CharCmd::Table { ring, d, level } => {
            let q = Arc::new(finite_ring(ring)?);
            let i = q_ideal(&q, level);
            let a = subquotient_a(q.clone(), *d, &i, &q.zero_ideal(), cfg.max_elements, cfg.seed)?;
            let t = a.table();
            let (first, second) = t.orthogonality_errors();
            let reps: Vec<String> = t.classes.iter().map(|c| a.group().rep(c[0]).display(&q)).collect();
            let rows: Vec<Value> = t
                .characters
                .iter()
                .map(|chi| json!({"degree": chi.degree().round(), "values": chi.values.iter().map(|&z| complex_json(z)).collect::<Vec<_>>()}))
                .collect();
            let passed = first <= 1e-6 && second <= 1e-6;
            checked(
                json!({
                    "ring": q.label(), "d": d, "level": i.display(&q), "order": t.order,
                    "class_sizes": t.class_sizes, "class_representatives": reps,
                    "degrees": t.degrees(), "characters": rows,
                    "orthogonality_errors": [first, second],
                }),
                passed,
            )
        }
        CharCmd::Triple { modulus, d, degree, level } => {
            let z = Ring::integers();
            let kernel = Ideal::new(&z, vec![z.constant(*modulus)])?;
            let lev = Ideal::new(&z, vec![z.constant(*level)])?;
            let probe = CharacterTriple { ring: z, d: *d, level: lev.clone(), kernel: kernel.clone(), orbit: vec![] };
            let model = noether_core::character::triple_model(&probe, cfg.max_elements, cfg.seed)?
                .ok_or_else(|| anyhow!("the kernel ideal must have finite index"))?;
            let idx = model
                .table()
                .degrees()
                .iter()
                .position(|g| g == degree)
                .ok_or_else(|| anyhow!("no irreducible character of degree {degree}"))?;
            let orbit: Vec<usize> = model
                .orbit(&model.table().characters[idx])?
                .iter()
                .map(|f| model.irreducible_index(f).ok_or_else(|| anyhow!("orbit member is not irreducible")))
                .collect::<Result<_>>()?;
            let t = CharacterTriple::from_table(&lev, &kernel, &model, &orbit)?;
            ok(serde_json::to_value(TripleJson::from_triple(&t)?)?)
        }
        CharCmd::Validate { triple } => {
            let t = load_triple(triple)?;
            let r = noether_core::character::validate_triple(&t, cfg.depth_bounds(), cfg.max_elements, cfg.seed)?;
            checked(validation_json(&r), r.passed)
        }
        CharCmd::Induce { triple, ball, sample } => {
            let t = load_triple(triple)?;
            let (passed, report) = induce_report(&t, cfg, *ball, *sample)?;
            checked(report, passed)
        }
    }
}

fn selftest(suite: &str, cfg: &RunConfig) -> Result<Outcome> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let results = names.iter().map(|n| suites::run_suite(n, cfg)).collect::<Result<Vec<_>>>()?;
    let passed = results.iter().all(|r| r.passed);
    checked(json!({"suites": results.iter().map(|r| r.to_json()).collect::<Vec<_>>(), "passed": passed}), passed)
}
