//! Known upper bounds on the sum choice number and the product bounds they
//! give through `ch_P* <= 2 ch_S - 1`.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SumBound {
    Constant(u32),
    /// `max_degree + offset`.
    DegreePlus(u32),
}

impl SumBound {
    pub fn evaluate(&self, max_degree: u32) -> u32 {
        match *self {
            SumBound::Constant(c) => c,
            SumBound::DegreePlus(o) => max_degree + o,
        }
    }

    fn product_expression(&self) -> String {
        match *self {
            SumBound::Constant(c) => (2 * c - 1).to_string(),
            SumBound::DegreePlus(o) => format!("2Δ+{}", 2 * o - 1),
        }
    }

    fn sum_expression(&self) -> String {
        match *self {
            SumBound::Constant(c) => c.to_string(),
            SumBound::DegreePlus(o) => format!("Δ+{o}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundRegistryEntry {
    pub class: &'static str,
    pub sum: SumBound,
    pub citation: &'static str,
}

impl BoundRegistryEntry {
    pub fn sum_expression(&self) -> String {
        self.sum.sum_expression()
    }

    pub fn product_expression(&self) -> String {
        self.sum.product_expression()
    }

    /// `2 ch_S - 1` at the given maximum degree.
    pub fn product_bound(&self, max_degree: u32) -> u32 {
        2 * self.sum.evaluate(max_degree) - 1
    }
}

/// Entries for nice connected graphs.
pub fn registry() -> Vec<BoundRegistryEntry> {
    use SumBound::*;
    let e = |class, sum, citation| BoundRegistryEntry {
        class,
        sum,
        citation,
    };
    vec![
        e("nice connected graph", DegreePlus(1), "DDWWWYZ19"),
        e("complete, complete bipartite, or tree", Constant(3), "BGN09"),
        e("2-degenerate and non-bipartite", Constant(3), "WZ18"),
        e("wheel", Constant(3), "PY13"),
        e("mad <= 11/4", Constant(3), "LWZ18"),
        e("outerplanar", Constant(4), "PY13"),
        e("maximum degree <= 4", Constant(4), "LLM20"),
        e("2-connected chordal, or line graph", Constant(5), "Won21"),
        e("planar", Constant(7), "WZ18"),
    ]
}

/// Plain-text table of the registry.
pub fn render() -> String {
    let mut out = String::from("class | ch_S <= | ch_P* <= | source\n");
    for b in registry() {
        out.push_str(&format!(
            "{} | {} | {} | {}\n",
            b.class,
            b.sum_expression(),
            b.product_expression(),
            b.citation
        ));
    }
    out
}
