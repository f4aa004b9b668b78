use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use latsum::algebra::poly::{pretty, pretty_ordered, MultiPoly};
use latsum::algebra::rational::format_scalar;
use latsum::corpus::corpus;
use latsum::face_poly::{check_master_duality, dual_g_all, fg_polynomials, h_polynomial, GradedPoset};
use latsum::gfun::{build_gfun, check_reciprocity, reciprocal_image, y_coefficient_profile};
use latsum::json::{parse_phi, parse_polytope, poly_to_json, polytope_to_json};
use latsum::polytope::Polytope;
use latsum::todd::theorem2_sides;
use latsum::wsum::{all_face_sums, check_ehrhart_macdonald, check_weighted_reciprocity, WeightPoly};
use latsum::{Error, Result};

use crate::{Cli, Command, Format, Input, WeightedInput};

pub enum Outcome {
    Done { json: Value, text: String },
    /// A computed identity failed; both sides are in the report.
    Violation { json: Value, text: String },
    Failed(Error),
}

impl Outcome {
    pub fn status(&self) -> u8 {
        match self {
            Outcome::Done { .. } => 0,
            Outcome::Failed(e) if !e.is_invariant_violation() => 1,
            _ => 2,
        }
    }

    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Outcome::Done { json, .. } | Outcome::Violation { json, .. }, Format::Json) => {
                format!("{}\n", serde_json::to_string_pretty(json).expect("JSON values serialize"))
            }
            (Outcome::Done { text, .. } | Outcome::Violation { text, .. }, Format::Pretty) => text.clone(),
            (Outcome::Failed(e), Format::Json) => {
                let kind = if e.is_invariant_violation() { "invariant" } else { "validation" };
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({ "error": { "kind": kind, "message": e.to_string() } }))
                        .expect("JSON values serialize")
                )
            }
            (Outcome::Failed(e), Format::Pretty) => format!("error: {e}\n"),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    if let Err(e) = configure_threads() {
        return Outcome::Failed(e);
    }
    let result = match &cli.command {
        Command::Info(input) => info(input),
        Command::Ehrhart(input) => ehrhart(input),
        Command::Wsum(args) => wsum(args),
        Command::Gfun {
            args,
            check_reciprocity,
            profile,
        } => gfun(args, *check_reciprocity, *profile),
        Command::Todd { args, verify } => todd(args, *verify),
        Command::Gpoly(input) => gpoly(input),
        Command::Corpus {
            seed,
            count,
            dim,
            max_coord,
        } => corpus_cmd(*seed, *count, *dim, *max_coord),
    };
    result.unwrap_or_else(Outcome::Failed)
}

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var("GFUN_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| Error::InvalidArgument(format!("GFUN_THREADS={value:?} is not a positive integer")))?;
    // A second initialization in the same process is harmless.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))
}

fn load_polytope(input: &Input) -> Result<Polytope> {
    parse_polytope(&read(&input.polytope)?)
}

fn load_weighted(args: &WeightedInput) -> Result<(Polytope, WeightPoly)> {
    let p = load_polytope(&args.input)?;
    let phi = match &args.phi {
        Some(path) => parse_phi(&read(path)?)?,
        None => WeightPoly::one(p.dim()),
    };
    if phi.num_vars() != p.dim() {
        return Err(Error::WeightDimension {
            expected: p.dim(),
            got: phi.num_vars(),
        });
    }
    Ok((p, phi))
}

/// `(q, y)` polynomials read best by descending y-power, then descending q-power.
fn pretty_qy(p: &MultiPoly) -> String {
    pretty_ordered(p, |a, b| (b[1], b[0]).cmp(&(a[1], a[0])))
}

fn done(json: Value, text: String) -> Result<Outcome> {
    Ok(Outcome::Done { json, text })
}

fn info(input: &Input) -> Result<Outcome> {
    let p = load_polytope(input)?;
    let lattice = p.face_lattice();
    let f = lattice.f_vector();
    let facets: Vec<Value> = p
        .halfspaces()
        .iter()
        .map(|h| json!({ "normal": h.normal, "offset": h.offset }))
        .collect();
    let volume = format_scalar(&p.volume());
    let points = p.lattice_points(lattice.top(), 1, false)?.len();
    let json = json!({
        "dim": p.dim(),
        "vertices": polytope_to_json(&p)["vertices"],
        "facets": facets,
        "f_vector": f,
        "simple": p.is_simple(),
        "volume": volume,
        "lattice_points": points,
    });
    let mut text = format!("dimension: {}\nvertices: {}\nfacets:\n", p.dim(), p.vertices().len());
    for h in p.halfspaces() {
        text.push_str(&format!("  <x, {:?}> + {} >= 0\n", h.normal, h.offset));
    }
    text.push_str(&format!(
        "f-vector: {f:?}\nsimple: {}\nvolume: {volume}\nlattice points: {points}\n",
        p.is_simple()
    ));
    done(json, text)
}

fn face_sums_report(p: &Polytope, phi: &WeightPoly, reciprocity: bool, label: &str) -> Result<Outcome> {
    let lattice = p.face_lattice();
    let sums = all_face_sums(p, phi)?;
    let mut faces = Vec::new();
    let mut text = String::new();
    for s in sums.iter().filter(|s| s.face != lattice.empty_face()) {
        let verts = &lattice.face(s.face).vertices;
        faces.push(json!({
            "face": verts,
            "closed": poly_to_json(&s.closed),
            "open": poly_to_json(&s.open),
        }));
        text.push_str(&format!(
            "face {verts:?}\n  closed: {}\n  open:   {}\n",
            pretty(&s.closed),
            pretty(&s.open)
        ));
    }
    text.push_str(&format!("{label}: {reciprocity}\n"));
    let json = json!({ "faces": faces, label: reciprocity });
    if reciprocity {
        done(json, text)
    } else {
        Ok(Outcome::Violation { json, text })
    }
}

fn ehrhart(input: &Input) -> Result<Outcome> {
    let p = load_polytope(input)?;
    let ok = check_ehrhart_macdonald(&p)?;
    face_sums_report(&p, &WeightPoly::one(p.dim()), ok, "ehrhart_macdonald")
}

fn wsum(args: &WeightedInput) -> Result<Outcome> {
    let (p, phi) = load_weighted(args)?;
    let ok = check_weighted_reciprocity(&p, &phi)?;
    face_sums_report(&p, &phi, ok, "reciprocity")
}

fn gfun(args: &WeightedInput, reciprocity: bool, profile: bool) -> Result<Outcome> {
    let (p, phi) = load_weighted(args)?;
    let g = build_gfun(&p, &phi)?;
    let mut json = json!({
        "gfun": poly_to_json(&g.poly),
        "dim": g.n,
        "weight_degree": g.d,
    });
    let mut text = format!("G(q, y) = {}\n", pretty_qy(&g.poly));
    if profile {
        let rows = y_coefficient_profile(&g)?;
        json["profile"] = Value::Array(rows.iter().map(poly_to_json).collect());
        for (k, row) in rows.iter().enumerate() {
            text.push_str(&format!("  y^{k}: {}\n", pretty(row)));
        }
    }
    if reciprocity {
        let ok = check_reciprocity(&g);
        json["reciprocity"] = Value::Bool(ok);
        text.push_str(&format!("reciprocity: {ok}\n"));
        if !ok {
            let image = reciprocal_image(&g);
            json["reciprocal_image"] = image.as_ref().map_or(Value::Null, poly_to_json);
            text.push_str(&format!(
                "(-y)^N G(-q, 1/y) = {}\n",
                image.as_ref().map_or("not a polynomial".to_string(), pretty_qy)
            ));
            return Ok(Outcome::Violation { json, text });
        }
    }
    done(json, text)
}

fn todd(args: &WeightedInput, verify: bool) -> Result<Outcome> {
    let (p, phi) = load_weighted(args)?;
    if !verify {
        let t = latsum::todd::apply_todd(&p, &phi)?;
        return done(json!({ "todd": poly_to_json(&t) }), format!("Todd operator: {}\n", pretty_qy(&t)));
    }
    let (t, g) = theorem2_sides(&p, &phi)?;
    let equal = t == g;
    let json = json!({
        "todd": poly_to_json(&t),
        "verify": { "equal": equal, "todd": poly_to_json(&t), "gfun": poly_to_json(&g) },
    });
    let text = format!(
        "Todd operator: {}\nG(q, y):       {}\nequal: {equal}\n",
        pretty_qy(&t),
        pretty_qy(&g)
    );
    if equal {
        done(json, text)
    } else {
        Ok(Outcome::Violation { json, text })
    }
}

fn gpoly(input: &Input) -> Result<Outcome> {
    let p = load_polytope(input)?;
    let lattice = p.face_lattice();
    let poset = GradedPoset::from_lattice(lattice);
    let (f, g) = fg_polynomials(&poset);
    let duality = check_master_duality(&poset);
    let dual = dual_g_all(lattice);
    let mut ranks: Vec<Vec<&Vec<usize>>> = vec![Vec::new(); p.dim() + 2];
    for face in lattice.faces() {
        ranks[face.rank()].push(&face.vertices);
    }
    let mut faces = Vec::new();
    let mut text = format!("f: {}\ng: {}\n", pretty(&f), pretty(&g));
    let h = p.is_simple().then(|| h_polynomial(&p));
    if let Some(h) = &h {
        text.push_str(&format!("h: {}\n", pretty(h)));
    }
    text.push_str("dual g by face:\n");
    for id in lattice.nonempty() {
        let face = lattice.face(id);
        faces.push(json!({ "face": face.vertices, "dim": face.dim, "dual_g": poly_to_json(&dual[id]) }));
        text.push_str(&format!("  {:?}: {}\n", face.vertices, pretty(&dual[id])));
    }
    text.push_str(&format!("master duality: {duality}\n"));
    let json = json!({
        "f": poly_to_json(&f),
        "g": poly_to_json(&g),
        "h": h.as_ref().map_or(Value::Null, poly_to_json),
        "ranks": ranks,
        "faces": faces,
        "master_duality": duality,
    });
    if duality {
        done(json, text)
    } else {
        Ok(Outcome::Violation { json, text })
    }
}

fn corpus_cmd(seed: u64, count: usize, dim: usize, max_coord: i64) -> Result<Outcome> {
    let members = corpus(seed, count, dim, max_coord)?;
    let json = Value::Array(members.iter().map(polytope_to_json).collect());
    let text: String = members
        .iter()
        .map(|p| format!("{}\n", polytope_to_json(p)))
        .collect();
    done(json, text)
}
