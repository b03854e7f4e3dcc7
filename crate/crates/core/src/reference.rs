//! Published summary values of four laypeople guessing experiments
//! (candies in a jar, paper-strip length, bag of beans, pages of a book).
//!
//! Only the rounded summaries are reproduced here, not the raw guesses.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PanelSummary {
    pub name: &'static str,
    pub n: usize,
    pub truth: f64,
    pub mean: f64,
    pub delta: f64,
}

pub const CANDIES: PanelSummary = PanelSummary {
    name: "candies",
    n: 105,
    truth: 636.0,
    mean: 531.0,
    delta: 48736.0,
};

pub const PAPER_STRIP: PanelSummary = PanelSummary {
    name: "paper-strip",
    n: 139,
    truth: 22.4,
    mean: 22.0,
    delta: 12.42,
};

pub const BEANS: PanelSummary = PanelSummary {
    name: "beans",
    n: 97,
    truth: 1.75,
    mean: 1.91,
    delta: 0.58,
};

pub const BOOK: PanelSummary = PanelSummary {
    name: "book",
    n: 140,
    truth: 784.0,
    mean: 560.0,
    delta: 40332.0,
};

pub const LAYPEOPLE: [PanelSummary; 4] = [CANDIES, PAPER_STRIP, BEANS, BOOK];

impl PanelSummary {
    /// `sqrt(delta) / <g>`
    pub fn scaled_diversity(&self) -> f64 {
        self.delta.sqrt() / self.mean
    }

    /// `|G - <g>| / G`
    pub fn scaled_error_abs(&self) -> f64 {
        (self.truth - self.mean).abs() / self.truth
    }
}
