use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckRecord {
    pub id: String,
    pub suite: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub millis: u128,
}

impl CheckRecord {
    pub fn line(&self) -> String {
        format!(
            "{}\t{}\t{:?}\t{}\t{}\t{}",
            self.id,
            self.suite,
            self.status,
            self.expected,
            self.actual,
            self.millis
        )
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Bundle {
    pub version: u32,
    pub suite: String,
    pub records: Vec<CheckRecord>,
    pub passed: bool,
    pub skipped: usize,
    pub elapsed_ms: u128,
}

impl Bundle {
    pub fn new(suite: String, mut records: Vec<CheckRecord>, elapsed_ms: u128) -> Bundle {
        records.sort_by(|a, b| a.id.cmp(&b.id));
        let passed = records.iter().all(|r| r.status != CheckStatus::Fail);
        let skipped = records.iter().filter(|r| r.status == CheckStatus::Skip).count();
        Bundle { version: 1, suite, records, passed, skipped, elapsed_ms }
    }

    /// Flat tab-separated summary, one line per check.
    pub fn tsv(&self) -> String {
        let mut out = String::from("id\tsuite\tstatus\texpected\tactual\tmillis\n");
        for r in &self.records {
            out.push_str(&r.line());
            out.push('\n');
        }
        out
    }

    pub fn exit_code(&self) -> i32 {
        if !self.passed {
            1
        } else if self.skipped > 0 {
            2
        } else {
            0
        }
    }
}
