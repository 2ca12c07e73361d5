//! Human-readable descriptions of the measures and their generators.

use fdiv_core::bounds::{monotone_regions, GLOBAL_EXTREMA};
use fdiv_core::MeasureId;
use serde::Serialize;

struct Text {
    title: &'static str,
    definition: &'static str,
    f: &'static str,
    f_second: &'static str,
}

fn text(id: MeasureId) -> Text {
    let (title, definition, f, f_second) = match id {
        MeasureId::D1 => (
            "relative J-divergence",
            "D(P||Q) = Σ (p-q) ln((p+q)/(2q))",
            "(x-1) ln((x+1)/2)",
            "(x+3)/(x+1)²",
        ),
        MeasureId::D2 => (
            "adjoint relative J-divergence",
            "D(Q||P) = Σ (q-p) ln((p+q)/(2p))",
            "(1-x) ln((x+1)/(2x))",
            "(3x+1)/(x²(x+1)²)",
        ),
        MeasureId::F1 => (
            "relative JS-divergence",
            "F(P||Q) = Σ p ln(2p/(p+q))",
            "(1-x)/2 - x ln((x+1)/(2x))",
            "1/(x(x+1)²)",
        ),
        MeasureId::F2 => (
            "adjoint relative JS-divergence",
            "F(Q||P) = Σ q ln(2q/(p+q))",
            "(x-1)/2 - ln((x+1)/2)",
            "1/(x+1)²",
        ),
        MeasureId::G1 => (
            "relative AG-divergence",
            "G(P||Q) = Σ ((p+q)/2) ln((p+q)/(2p))",
            "(x-1)/2 + ((x+1)/2) ln((x+1)/(2x))",
            "1/(2x²(x+1))",
        ),
        MeasureId::G2 => (
            "adjoint relative AG-divergence",
            "G(Q||P) = Σ ((p+q)/2) ln((p+q)/(2q))",
            "(1-x)/2 + ((x+1)/2) ln((x+1)/2)",
            "1/(2(x+1))",
        ),
        MeasureId::J => (
            "J-divergence",
            "J(P||Q) = Σ (p-q) ln(p/q)",
            "(x-1) ln x",
            "(x+1)/x²",
        ),
        MeasureId::I => (
            "JS-divergence (information radius)",
            "I(P||Q) = ½ Σ [p ln(2p/(p+q)) + q ln(2q/(p+q))]",
            "(x/2) ln x - ((x+1)/2) ln((x+1)/2)",
            "1/(2x(x+1))",
        ),
        MeasureId::T => (
            "AG-divergence",
            "T(P||Q) = Σ ((p+q)/2) ln((p+q)/(2√(pq)))",
            "((x+1)/2) ln((x+1)/(2√x))",
            "(x²+1)/(4x²(x+1))",
        ),
        MeasureId::Phi(_) => (
            "relative information of type s",
            "Φ_s(P||Q) = (Σ p^s q^(1-s) - 1)/(s(s-1)); K(Q||P) at s = 0, K(P||Q) at s = 1",
            "(x^s - 1)/(s(s-1)); -ln x at s = 0, x ln x at s = 1",
            "x^(s-2)",
        ),
    };
    Text {
        title,
        definition,
        f,
        f_second,
    }
}

/// Exact text for the constants that appear in the catalog.
fn exact(x: f64) -> String {
    let sqrt2 = std::f64::consts::SQRT_2;
    let known = [
        (0.75, "3/4"),
        (0.25, "1/4"),
        (1.0 / 3.0, "1/3"),
        (9.0 / 8.0, "9/8"),
        (3.0 * 3f64.sqrt() / 16.0, "3√3/16"),
        ((sqrt2 - 1.0) / 2.0, "(√2-1)/2"),
        (sqrt2 - 1.0, "√2-1"),
        (sqrt2 + 1.0, "√2+1"),
    ];
    known
        .iter()
        .find(|(v, _)| (v - x).abs() <= 1e-15)
        .map(|(_, t)| t.to_string())
        .unwrap_or_else(|| x.to_string())
}

#[derive(Debug, Serialize)]
pub struct ClosedForm {
    pub increasing_up_to: f64,
    pub decreasing_from: f64,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct GlobalEntry {
    pub s: f64,
    pub kind: &'static str,
    pub value: f64,
    pub value_text: String,
    pub at: f64,
    pub at_text: String,
}

#[derive(Debug, Serialize)]
pub struct Entry {
    pub id: &'static str,
    pub title: &'static str,
    pub definition: &'static str,
    pub f: &'static str,
    pub f_second: &'static str,
    /// `None` for the `Φ_s` family, whose `g` is monotone for every `s`.
    pub closed_form: Option<ClosedForm>,
    pub global_extrema: Vec<GlobalEntry>,
}

pub fn entries() -> Vec<Entry> {
    let ids = MeasureId::FIXED.into_iter().chain([MeasureId::Phi(0.0)]);
    ids.map(|id| {
        let t = text(id);
        let closed_form = monotone_regions(id).map(|r| ClosedForm {
            increasing_up_to: r.increasing_up_to,
            decreasing_from: r.decreasing_from,
            text: format!(
                "s ≤ {} or s ≥ {}",
                exact(r.increasing_up_to),
                exact(r.decreasing_from)
            ),
        });
        let global_extrema = GLOBAL_EXTREMA
            .iter()
            .filter(|e| e.measure == id)
            .map(|e| GlobalEntry {
                s: e.s,
                kind: e.kind.name(),
                value: e.value,
                value_text: exact(e.value),
                at: e.at,
                at_text: exact(e.at),
            })
            .collect();
        Entry {
            id: id.name(),
            title: t.title,
            definition: t.definition,
            f: t.f,
            f_second: t.f_second,
            closed_form,
            global_extrema,
        }
    })
    .collect()
}

pub fn render_text(entries: &[Entry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!("{}: {}\n", e.id, e.title));
        out.push_str(&format!("    {}\n", e.definition));
        out.push_str(&format!("    f(x) = {}\n", e.f));
        out.push_str(&format!("    f″(x) = {}\n", e.f_second));
        match &e.closed_form {
            Some(c) => out.push_str(&format!("    closed-form m, M: {}\n", c.text)),
            None => out.push_str("    closed-form m, M: every s (g(x) = x^(t-s) for PHI(t))\n"),
        }
        for g in &e.global_extrema {
            out.push_str(&format!(
                "    global {} g at s = {} is {}, attained at x = {}\n",
                g.kind, g.s, g.value_text, g.at_text
            ));
        }
    }
    out
}
