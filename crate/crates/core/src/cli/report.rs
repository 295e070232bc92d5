use std::fmt;

use clap::ValueEnum;
use serde::Serialize;

use crate::deletion::{self, CharpolyEngine, LeafMethod};
use crate::graph::Pseudograph;
use crate::oracle;
use crate::poly::IntPolynomial;
use crate::sachs;

/// The five independent routes to a characteristic polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Sachs,
    LoopExpansion,
    FigureForm,
    VertexDeletion,
    Oracle,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Sachs,
        Method::LoopExpansion,
        Method::FigureForm,
        Method::VertexDeletion,
        Method::Oracle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Sachs => "sachs",
            Method::LoopExpansion => "loop-expansion",
            Method::FigureForm => "figure-form",
            Method::VertexDeletion => "vertex-deletion",
            Method::Oracle => "oracle",
        }
    }

    /// Whether the method enumerates basic figures and is subject to the order cap.
    pub fn enumerates(self) -> bool {
        self != Method::Oracle
    }

    /// `φ(g)` by this method. Vertex deletion expands along `order`, or
    /// along every vertex in increasing order when `order` is `None`.
    pub fn charpoly(self, g: &Pseudograph, order: Option<&[usize]>) -> IntPolynomial {
        match self {
            Method::Sachs => sachs::charpoly_sachs(g),
            Method::LoopExpansion => deletion::charpoly_loop_expansion(g),
            Method::FigureForm => deletion::charpoly_basic_figure_form(g),
            Method::VertexDeletion => {
                let all: Vec<usize> = (0..g.order()).collect();
                let engine = CharpolyEngine::new(LeafMethod::Sachs);
                deletion::charpoly_vertex_deletion_with(g, order.unwrap_or(&all), &engine)
                    .expect("vertex order holds distinct vertices of g")
            }
            Method::Oracle => oracle::charpoly_of_graph(g),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One method's polynomial; `vertex_order` is set for vertex deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodResult {
    pub method: Method,
    pub vertex_order: Option<Vec<usize>>,
    pub polynomial: IntPolynomial,
}

impl MethodResult {
    pub fn label(&self) -> String {
        match &self.vertex_order {
            Some(order) => format!("{}{:?}", self.method, order),
            None => self.method.to_string(),
        }
    }
}

/// First pair of results that differ, and the lowest exponent where they do.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disagreement {
    pub left: String,
    pub right: String,
    pub degree: usize,
}

/// Every method's polynomial for one graph plus the agreement verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MethodReport {
    pub order: usize,
    pub results: Vec<MethodResult>,
    pub agree: bool,
    pub disagreement: Option<Disagreement>,
}

impl MethodReport {
    /// Runs all five methods; vertex deletion once per entry of `vertex_orders`
    /// (once in natural order if it is empty).
    pub fn compute(g: &Pseudograph, vertex_orders: &[Vec<usize>]) -> MethodReport {
        let mut results = Vec::new();
        for method in Method::ALL {
            if method == Method::VertexDeletion {
                let natural = [(0..g.order()).collect::<Vec<_>>()];
                let orders = if vertex_orders.is_empty() {
                    &natural[..]
                } else {
                    vertex_orders
                };
                for order in orders {
                    results.push(MethodResult {
                        method,
                        vertex_order: Some(order.clone()),
                        polynomial: method.charpoly(g, Some(order)),
                    });
                }
            } else {
                results.push(MethodResult {
                    method,
                    vertex_order: None,
                    polynomial: method.charpoly(g, None),
                });
            }
        }
        Self::from_results(g.order(), results)
    }

    pub fn from_results(order: usize, results: Vec<MethodResult>) -> MethodReport {
        let disagreement = results.first().and_then(|first| {
            results.iter().skip(1).find_map(|r| {
                first
                    .polynomial
                    .first_difference(&r.polynomial)
                    .map(|degree| Disagreement {
                        left: first.label(),
                        right: r.label(),
                        degree,
                    })
            })
        });
        MethodReport {
            order,
            agree: disagreement.is_none(),
            results,
            disagreement,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.order,
            "agree": self.agree,
            "results": self.results.iter().map(|r| serde_json::json!({
                "method": r.method,
                "vertex_order": r.vertex_order,
                "coeffs": r.polynomial.to_decimal_strings(),
            })).collect::<Vec<_>>(),
            "disagreement": self.disagreement.as_ref().map(|d| serde_json::json!({
                "left": d.left,
                "right": d.right,
                "degree": d.degree,
            })),
        })
    }
}

impl fmt::Display for MethodReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .results
            .iter()
            .map(|r| r.label().len())
            .max()
            .unwrap_or(0);
        for r in &self.results {
            writeln!(f, "{:<width$}  {}", r.label(), r.polynomial)?;
        }
        match &self.disagreement {
            None => write!(f, "agree: yes"),
            Some(d) => write!(
                f,
                "agree: no ({} vs {} differ at x^{})",
                d.left, d.right, d.degree
            ),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::looped_path;

    #[test]
    fn all_methods_agree_on_looped_path() {
        let report = MethodReport::compute(&looped_path(), &[vec![1, 0, 2], vec![2]]);
        assert!(report.agree);
        assert_eq!(report.results.len(), 6);
        assert!(report.to_string().ends_with("agree: yes"));
    }

    #[test]
    fn disagreement_is_located() {
        let good = IntPolynomial::from_i64s(&[2, -1, -2, 1]);
        let bad = IntPolynomial::from_i64s(&[1, -1, -2, 1]);
        let report = MethodReport::from_results(
            3,
            vec![
                MethodResult {
                    method: Method::Sachs,
                    vertex_order: None,
                    polynomial: good.clone(),
                },
                MethodResult {
                    method: Method::Oracle,
                    vertex_order: None,
                    polynomial: good,
                },
                MethodResult {
                    method: Method::FigureForm,
                    vertex_order: None,
                    polynomial: bad,
                },
            ],
        );
        assert!(!report.agree);
        assert_eq!(
            report.disagreement,
            Some(Disagreement {
                left: "sachs".into(),
                right: "figure-form".into(),
                degree: 0
            })
        );
    }
}
