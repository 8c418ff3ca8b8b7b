use attractors::{AttractorSet, RemappedText};
use serde::Serialize;

#[derive(Clone, Copy)]
pub enum Format {
    Plain,
    Json,
}

/// The summary record printed by every solving command. Counts that a
/// command does not compute stay `None` (JSON `null`).
#[derive(Default, Serialize)]
pub struct Summary {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<&'static str>,
    pub n: usize,
    pub sigma: usize,
    pub k: usize,
    pub universe: Option<usize>,
    pub candidates: Option<usize>,
    pub graph_edges: Option<usize>,
    pub size: Option<usize>,
    pub positions: Vec<usize>,
    pub ms: f64,
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "-".to_string(), |x| x.to_string())
}

impl Summary {
    pub fn emit(mut self, set: Option<&AttractorSet>, format: Format) {
        if let Some(set) = set {
            self.size = Some(set.len());
            self.positions = set.positions().collect();
        }
        match format {
            Format::Json => println!("{}", serde_json::to_string(&self).expect("serializable")),
            Format::Plain => {
                for p in &self.positions {
                    println!("{p}");
                }
                let status = self.status.map(|s| format!("status={s} ")).unwrap_or_default();
                println!(
                    "# {status}n={} sigma={} k={} universe={} candidates={} graph_edges={} size={} ms={:.3}",
                    self.n,
                    self.sigma,
                    self.k,
                    opt(self.universe),
                    opt(self.candidates),
                    opt(self.graph_edges),
                    opt(self.size),
                    self.ms
                );
            }
        }
    }
}

#[derive(Serialize)]
pub struct WitnessReport {
    /// 1-based start of one occurrence.
    pub position: usize,
    pub length: usize,
    pub substring: String,
    /// Inclusive 1-based suffix-array rank interval of the substring.
    pub sa_interval: [usize; 2],
}

impl WitnessReport {
    pub fn new(text: &RemappedText, bytes: bool, offset: usize, len: usize, (l, r): (usize, usize)) -> Self {
        let originals = text.symbols()[offset..offset + len].iter().map(|&c| text.original(c));
        let substring = if bytes {
            let raw: Vec<u8> = originals.map(|c| c as u8).collect();
            String::from_utf8_lossy(&raw).into_owned()
        } else {
            originals.map(|c| c.to_string()).collect::<Vec<_>>().join(" ")
        };
        Self {
            position: offset + 1,
            length: len,
            substring,
            sa_interval: [l + 1, r + 1],
        }
    }
}

#[derive(Default, Serialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub sharp: bool,
    pub n: usize,
    pub sigma: usize,
    pub k: usize,
    pub universe: Option<usize>,
    pub size: usize,
    pub witness: Option<WitnessReport>,
    pub ms: f64,
}

impl VerifyReport {
    pub fn emit(&self, format: Format) {
        match format {
            Format::Json => println!("{}", serde_json::to_string(self).expect("serializable")),
            Format::Plain => {
                match &self.witness {
                    None => println!("valid"),
                    Some(w) => println!(
                        "invalid: {:?} at position {} (length {}, SA interval [{}, {}]) has no occurrence crossing the set",
                        w.substring, w.position, w.length, w.sa_interval[0], w.sa_interval[1]
                    ),
                }
                println!(
                    "# n={} sigma={} k={} universe={} size={} ms={:.3}",
                    self.n,
                    self.sigma,
                    self.k,
                    opt(self.universe),
                    self.size,
                    self.ms
                );
            }
        }
    }
}
