/// Search limits shared by the budgeted procedures.
///
/// `degree` bounds the total degree of candidate multipliers, `exponent` the
/// powers and shift ranges tried, `gb_pair_limit` the number of critical pairs
/// a Gröbner completion may process.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub degree: u32,
    pub exponent: u32,
    pub gb_pair_limit: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { degree: 12, exponent: 12, gb_pair_limit: 5000 }
    }
}

impl Budget {
    pub fn with_degree(mut self, degree: u32) -> Self {
        self.degree = degree;
        self
    }

    pub fn with_exponent(mut self, exponent: u32) -> Self {
        self.exponent = exponent;
        self
    }
}
