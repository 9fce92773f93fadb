//! JSON documents emitted by the subcommands.

use escalier_core::barcode::Bar;
use escalier_core::mulmat::Residuals;
use escalier_core::{BarCode, FieldSpec, Matrix, MulState, Poly, Scalar, Separator, Session, Term};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::input::render_point;
use crate::CliError;

pub type Grid = Vec<Vec<String>>;

#[derive(Serialize)]
pub struct Assignment {
    pub point: usize,
    pub coordinates: Vec<String>,
    pub term: String,
}

#[derive(Serialize)]
pub struct EscalierDoc {
    pub field: String,
    pub n: usize,
    pub escalier: Vec<String>,
    pub correspondence: Vec<Assignment>,
    pub m: Vec<Vec<u32>>,
    pub barcode: Value,
    pub starset: Vec<String>,
}

#[derive(Serialize)]
pub struct SeparatorEntry {
    pub point: usize,
    pub factored: String,
    pub expanded: String,
}

#[derive(Serialize)]
pub struct SeparatorDoc {
    pub field: String,
    pub n: usize,
    pub separators: Vec<SeparatorEntry>,
}

#[derive(Serialize)]
pub struct VarMatrix {
    pub var: String,
    pub matrix: Grid,
}

#[derive(Serialize)]
pub struct ResidualDoc {
    pub inverse: Grid,
    pub eigen: Vec<VarMatrix>,
    pub commutators: Vec<VarMatrix>,
    pub scaling: Vec<VarMatrix>,
    pub all_zero: bool,
}

#[derive(Serialize)]
pub struct MatrixDoc {
    pub field: String,
    pub n: usize,
    pub terms: Vec<String>,
    pub b: Grid,
    pub c: Grid,
    pub d: Vec<VarMatrix>,
    pub a: Vec<VarMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residuals: Option<ResidualDoc>,
}

#[derive(Serialize)]
pub struct BorderEntry {
    pub term: String,
    pub polynomial: String,
}

#[derive(Serialize)]
pub struct GroebnerDoc {
    pub field: String,
    pub n: usize,
    pub escalier: Vec<String>,
    pub border: Vec<BorderEntry>,
    pub reduced_basis: Vec<String>,
}

/// Everything needed to continue a run: points, `M` and the bar code.
#[derive(Serialize, Deserialize)]
pub struct StateDoc {
    pub field: String,
    pub n: usize,
    pub points: Vec<Vec<String>>,
    pub m: Vec<Vec<u32>>,
    pub barcode: Value,
}

fn terms(ts: &[Term]) -> Vec<String> {
    ts.iter().map(Term::render).collect()
}

fn var_name(h: usize) -> String {
    format!("x{h}")
}

/// Nested arrays with 1-based point indices.
pub fn bar_to_json(bar: &Bar) -> Value {
    match bar {
        Bar::Points(p) => Value::from(p.iter().map(|i| i + 1).collect::<Vec<_>>()),
        Bar::Bars(children) => Value::Array(children.iter().map(bar_to_json).collect()),
    }
}

pub fn barcode_to_json(b: &BarCode) -> Value {
    Value::Array(b.bars().iter().map(bar_to_json).collect())
}

fn bar_from_json(v: &Value, level: usize) -> Result<Bar, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::Input(format!("bar code: expected an array at row {level}")))?;
    if level == 1 {
        let pts = items
            .iter()
            .map(|x| match x.as_u64() {
                Some(i) if i >= 1 => Ok(i as usize - 1),
                _ => Err(CliError::Input(format!("bar code: invalid point index {x}"))),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Bar::Points(pts))
    } else {
        let children = items
            .iter()
            .map(|c| bar_from_json(c, level - 1))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Bar::Bars(children))
    }
}

pub fn barcode_from_json(v: &Value, n: usize) -> Result<BarCode, CliError> {
    let items = v
        .as_array()
        .ok_or_else(|| CliError::Input("bar code: expected an array".into()))?;
    let bars = items
        .iter()
        .map(|b| bar_from_json(b, n))
        .collect::<Result<Vec<_>, _>>()?;
    BarCode::from_bars(n, bars).map_err(|e| CliError::Input(format!("bar code: {e}")))
}

pub fn escalier_doc(s: &Session) -> Result<EscalierDoc, CliError> {
    let g = s.game();
    let table = g.table();
    let correspondence = g
        .points()
        .iter()
        .enumerate()
        .map(|(i, p)| Assignment {
            point: i + 1,
            coordinates: render_point(p),
            term: table.term(i).render(),
        })
        .collect();
    Ok(EscalierDoc {
        field: g.field().to_string(),
        n: g.nvars(),
        escalier: terms(&table.escalier()),
        correspondence,
        m: table.rows().to_vec(),
        barcode: barcode_to_json(g.barcode()),
        starset: terms(&g.barcode().star_set()?),
    })
}

fn signed_root(var: usize, root: &Scalar) -> String {
    if root.is_zero() {
        var_name(var)
    } else if root.signum() < 0 {
        format!("({} + {})", var_name(var), (-root).render())
    } else {
        format!("({} - {})", var_name(var), root.render())
    }
}

/// Product form `c*(x_i - a)*...` with the scales collected in front.
pub fn factored(q: &Separator, field: FieldSpec) -> String {
    let mut c = Scalar::one(field);
    for f in &q.factors {
        c = &c * &f.scale;
    }
    let body: Vec<String> = q.factors.iter().map(|f| signed_root(f.var, &f.root)).collect();
    if body.is_empty() {
        return c.render();
    }
    let body = body.join("*");
    if c.is_one() {
        body
    } else if (-&c).is_one() {
        format!("-{body}")
    } else {
        format!("{}*{body}", c.render())
    }
}

pub fn separator_doc(s: &Session) -> SeparatorDoc {
    let g = s.game();
    let separators = s
        .separators()
        .separators()
        .iter()
        .map(|q| SeparatorEntry {
            point: q.owner + 1,
            factored: factored(q, g.field()),
            expanded: q.expand(g.nvars(), g.field()).to_string(),
        })
        .collect();
    SeparatorDoc {
        field: g.field().to_string(),
        n: g.nvars(),
        separators,
    }
}

fn grid(m: &Matrix) -> Grid {
    m.to_strings()
}

fn per_var(ms: impl Iterator<Item = (String, Matrix)>) -> Vec<VarMatrix> {
    ms.map(|(var, m)| VarMatrix { var, matrix: grid(&m) }).collect()
}

pub fn residual_doc(r: &Residuals, n: usize) -> ResidualDoc {
    let pairs = (1..=n).flat_map(|h| (h + 1..=n).map(move |k| format!("x{h},x{k}")));
    ResidualDoc {
        inverse: grid(&r.inverse),
        eigen: per_var(r.eigen.iter().enumerate().map(|(h, m)| (var_name(h + 1), m.clone()))),
        commutators: per_var(pairs.zip(r.commutators.iter().cloned())),
        scaling: per_var(r.scaling.iter().enumerate().map(|(h, m)| (var_name(h + 1), m.clone()))),
        all_zero: r.all_zero(),
    }
}

pub fn matrix_doc(m: &MulState, n: usize, field: FieldSpec, check: bool) -> Result<MatrixDoc, CliError> {
    let residuals = if check { Some(residual_doc(&m.residuals()?, n)) } else { None };
    Ok(MatrixDoc {
        field: field.to_string(),
        n,
        terms: terms(m.terms()),
        b: grid(m.b()),
        c: grid(m.c()),
        d: per_var((1..=n).map(|h| (var_name(h), m.d(h).clone()))),
        a: per_var((1..=n).map(|h| (var_name(h), m.a(h).clone()))),
        residuals,
    })
}

pub fn groebner_doc(s: &Session) -> Result<GroebnerDoc, CliError> {
    let g = s.game();
    let m = s
        .matrices()
        .ok_or_else(|| CliError::Internal("matrix layer disabled".into()))?;
    let star = g.barcode().star_set()?;
    let border = star
        .iter()
        .zip(m.groebner_border(&star)?)
        .map(|(t, p)| BorderEntry {
            term: t.render(),
            polynomial: p.to_string(),
        })
        .collect();
    Ok(GroebnerDoc {
        field: g.field().to_string(),
        n: g.nvars(),
        escalier: terms(&g.table().escalier()),
        border,
        reduced_basis: m.reduced_groebner_basis()?.iter().map(Poly::to_string).collect(),
    })
}

pub fn state_doc(s: &Session) -> StateDoc {
    let g = s.game();
    StateDoc {
        field: g.field().to_string(),
        n: g.nvars(),
        points: g.points().iter().map(render_point).collect(),
        m: g.table().rows().to_vec(),
        barcode: barcode_to_json(g.barcode()),
    }
}
