//! Versioned binary serialization for built oracles.
//!
//! Layout: magic "VCQO", format version (u16), mode byte (1 = fixed-k
//! oracle, 2 = general oracle), k, n, then the cut list and mode-specific
//! tables. All integers are little-endian and fixed width; every list is
//! length-prefixed and written in the oracle's canonical storage order,
//! so the same oracle always serializes to the same bytes. The full byte
//! layout is documented in docs/oracle_format.md.

use thiserror::Error;

use crate::flow::Cut;
use crate::general::{GeneralOracle, GeneralStats};
use crate::graph::{Edge, NodeId};
use crate::kconn::{KConnOracle, SourceRecord, NO_CUT};
use crate::laminar::{LaminarForest, TreeNodeId};

pub const MAGIC: [u8; 4] = *b"VCQO";
pub const VERSION: u16 = 1;

const MODE_KCONN: u8 = 1;
const MODE_GENERAL: u8 = 2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("oracle file is not in VCQO format")]
    BadMagic,
    #[error("unsupported oracle format version {0}")]
    UnsupportedVersion(u16),
    #[error("unknown oracle mode byte {0}")]
    BadMode(u8),
    #[error("oracle file truncated: wanted {wanted} more bytes at offset {offset}")]
    Truncated { offset: usize, wanted: usize },
    #[error("oracle file has {0} trailing bytes")]
    TrailingBytes(usize),
    #[error("malformed oracle payload: {0}")]
    Malformed(&'static str),
}

/// Either oracle flavor, with a uniform query surface for the CLI.
#[derive(Debug, Clone, PartialEq)]
pub enum Oracle {
    KConn(KConnOracle),
    General(GeneralOracle),
}

impl Oracle {
    pub fn k(&self) -> usize {
        match self {
            Oracle::KConn(o) => o.k(),
            Oracle::General(o) => o.k(),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            Oracle::KConn(o) => o.n(),
            Oracle::General(o) => o.n(),
        }
    }

    pub fn cuts(&self) -> &[Cut] {
        match self {
            Oracle::KConn(o) => o.cuts(),
            Oracle::General(o) => o.cuts(),
        }
    }

    pub fn cut(&self, id: u32) -> &Cut {
        &self.cuts()[id as usize]
    }

    /// Id of a stored st-cut, or None when the pair's connectivity
    /// exceeds k. Errors on s = t.
    pub fn query_cut(&self, s: NodeId, t: NodeId) -> Result<Option<u32>, String> {
        match self {
            Oracle::KConn(o) => o.query_cut(s, t).map_err(|e| e.to_string()),
            Oracle::General(o) => o.query_cut(s, t).map_err(|e| e.to_string()),
        }
    }

    pub fn query_con(&self, s: NodeId, t: NodeId) -> Result<bool, String> {
        Ok(self.query_cut(s, t)?.is_none())
    }
}

struct Writer(Vec<u8>);

impl Writer {
    fn u8(&mut self, v: u8) {
        self.0.push(v);
    }

    fn u16(&mut self, v: u16) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }

    fn u32(&mut self, v: u32) {
        self.0.extend_from_slice(&v.to_le_bytes());
    }

    fn len_u32(&mut self, v: usize) {
        self.u32(u32::try_from(v).expect("list length fits u32"));
    }

    fn node(&mut self, v: NodeId) {
        self.u32(v.index() as u32);
    }

    fn node_slice(&mut self, nodes: &[NodeId]) {
        self.len_u32(nodes.len());
        for &v in nodes {
            self.node(v);
        }
    }

    fn u32_slice(&mut self, values: &[u32]) {
        for &v in values {
            self.u32(v);
        }
    }

    fn cut(&mut self, cut: &Cut) {
        self.node_slice(&cut.vertices);
        self.len_u32(cut.edges.len());
        for e in &cut.edges {
            self.node(e.u());
            self.node(e.v());
        }
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    at: usize,
}

impl<'a> Reader<'a> {
    fn take(&mut self, len: usize) -> Result<&'a [u8], FormatError> {
        if self.bytes.len() - self.at < len {
            return Err(FormatError::Truncated {
                offset: self.at,
                wanted: len - (self.bytes.len() - self.at),
            });
        }
        let slice = &self.bytes[self.at..self.at + len];
        self.at += len;
        Ok(slice)
    }

    fn u8(&mut self) -> Result<u8, FormatError> {
        Ok(self.take(1)?[0])
    }

    fn u16(&mut self) -> Result<u16, FormatError> {
        Ok(u16::from_le_bytes(self.take(2)?.try_into().unwrap()))
    }

    fn u32(&mut self) -> Result<u32, FormatError> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().unwrap()))
    }

    /// Length prefix, sanity-capped so corrupt lengths fail fast instead
    /// of attempting giant allocations.
    fn len(&mut self) -> Result<usize, FormatError> {
        let len = self.u32()? as usize;
        if len > self.bytes.len() - self.at {
            // Every list element occupies at least one byte.
            return Err(FormatError::Truncated {
                offset: self.at,
                wanted: len - (self.bytes.len() - self.at),
            });
        }
        Ok(len)
    }

    fn node(&mut self, n: u32) -> Result<NodeId, FormatError> {
        let v = self.u32()?;
        if v >= n {
            return Err(FormatError::Malformed("node id out of range"));
        }
        Ok(NodeId::new(v as usize))
    }

    fn u32_vec(&mut self, count: usize) -> Result<Vec<u32>, FormatError> {
        let raw = self.take(count * 4)?;
        Ok(raw
            .chunks_exact(4)
            .map(|c| u32::from_le_bytes(c.try_into().unwrap()))
            .collect())
    }

    fn cut(&mut self, n: u32) -> Result<Cut, FormatError> {
        let vcount = self.len()?;
        let mut vertices = Vec::with_capacity(vcount);
        for _ in 0..vcount {
            vertices.push(self.node(n)?);
        }
        let ecount = self.len()?;
        let mut edges = Vec::with_capacity(ecount);
        for _ in 0..ecount {
            let u = self.node(n)?;
            let v = self.node(n)?;
            if u == v {
                return Err(FormatError::Malformed("cut edge is a self loop"));
            }
            edges.push(Edge::new(u, v));
        }
        Ok(Cut { vertices, edges })
    }
}

pub fn save(oracle: &Oracle) -> Vec<u8> {
    let mut w = Writer(Vec::new());
    w.0.extend_from_slice(&MAGIC);
    w.u16(VERSION);
    match oracle {
        Oracle::KConn(o) => {
            w.u8(MODE_KCONN);
            w.u32(o.k() as u32);
            w.u32(o.n() as u32);
            write_cut_list(&mut w, o.cuts());
            w.u32_slice(o.node_cut_ids());
            w.len_u32(o.critical_edges().len());
            for &(e, id) in o.critical_edges() {
                w.node(e.u());
                w.node(e.v());
                w.u32(id);
            }
            let sources: Vec<(usize, &SourceRecord)> = o
                .source_records()
                .iter()
                .enumerate()
                .filter_map(|(s, rec)| rec.as_ref().map(|r| (s, r)))
                .collect();
            w.len_u32(sources.len());
            for (s, rec) in sources {
                w.u32(s as u32);
                w.u32(rec.forest);
                w.u32(rec.node.0);
                w.u32(rec.cut);
                w.node_slice(&rec.boundary);
            }
            w.len_u32(o.forests().len());
            for forest in o.forests() {
                let (parent, dfs_in, dfs_out, psi) = forest.raw_parts();
                w.len_u32(parent.len());
                w.u32_slice(parent);
                w.u32_slice(dfs_in);
                w.u32_slice(dfs_out);
                w.u32_slice(psi);
            }
        }
        Oracle::General(o) => {
            w.u8(MODE_GENERAL);
            w.u32(o.k() as u32);
            w.u32(o.n() as u32);
            let (kappa, cut_id, cuts, stats) = o.raw_parts();
            write_cut_list(&mut w, cuts);
            w.len_u32(stats.adjacent_cuts);
            w.len_u32(stats.nonadjacent_cuts);
            w.0.extend_from_slice(kappa);
            w.u32_slice(cut_id);
        }
    }
    w.0
}

fn write_cut_list(w: &mut Writer, cuts: &[Cut]) {
    w.len_u32(cuts.len());
    for cut in cuts {
        w.cut(cut);
    }
}

pub fn load(bytes: &[u8]) -> Result<Oracle, FormatError> {
    let mut r = Reader { bytes, at: 0 };
    if r.take(4)? != MAGIC {
        return Err(FormatError::BadMagic);
    }
    let version = r.u16()?;
    if version != VERSION {
        return Err(FormatError::UnsupportedVersion(version));
    }
    let mode = r.u8()?;
    let k = r.u32()?;
    let n = r.u32()?;
    let oracle = match mode {
        MODE_KCONN => Oracle::KConn(load_kconn(&mut r, k, n)?),
        MODE_GENERAL => Oracle::General(load_general(&mut r, k, n)?),
        other => return Err(FormatError::BadMode(other)),
    };
    if r.at != bytes.len() {
        return Err(FormatError::TrailingBytes(bytes.len() - r.at));
    }
    Ok(oracle)
}

fn load_cut_list(r: &mut Reader, n: u32) -> Result<Vec<Cut>, FormatError> {
    let count = r.len()?;
    let mut cuts = Vec::with_capacity(count);
    for _ in 0..count {
        cuts.push(r.cut(n)?);
    }
    Ok(cuts)
}

fn check_cut_id(id: u32, cuts: usize) -> Result<u32, FormatError> {
    if id != NO_CUT && id as usize >= cuts {
        return Err(FormatError::Malformed("cut id out of range"));
    }
    Ok(id)
}

fn load_kconn(r: &mut Reader, k: u32, n: u32) -> Result<KConnOracle, FormatError> {
    let cuts = load_cut_list(r, n)?;
    let node_cut = r.u32_vec(n as usize)?;
    for &id in &node_cut {
        check_cut_id(id, cuts.len())?;
    }
    let critical_count = r.len()?;
    let mut critical = Vec::with_capacity(critical_count);
    for _ in 0..critical_count {
        let u = r.node(n)?;
        let v = r.node(n)?;
        if u == v {
            return Err(FormatError::Malformed("critical edge is a self loop"));
        }
        let id = check_cut_id(r.u32()?, cuts.len())?;
        if id == NO_CUT {
            return Err(FormatError::Malformed("critical edge lacks a cut"));
        }
        critical.push((Edge::new(u, v), id));
    }
    let source_count = r.len()?;
    let mut sources: Vec<Option<SourceRecord>> = vec![None; n as usize];
    for _ in 0..source_count {
        let s = r.node(n)?;
        let forest = r.u32()?;
        let node = TreeNodeId(r.u32()?);
        let cut = check_cut_id(r.u32()?, cuts.len())?;
        if cut == NO_CUT {
            return Err(FormatError::Malformed("source record lacks a cut"));
        }
        let bcount = r.len()?;
        let mut boundary = Vec::with_capacity(bcount);
        for _ in 0..bcount {
            boundary.push(r.node(n)?);
        }
        if sources[s.index()].is_some() {
            return Err(FormatError::Malformed("duplicate source record"));
        }
        sources[s.index()] = Some(SourceRecord {
            forest,
            node,
            cut,
            boundary,
        });
    }
    let forest_count = r.len()?;
    let mut forests = Vec::with_capacity(forest_count);
    for _ in 0..forest_count {
        let nodes = r.len()?;
        if nodes == 0 {
            return Err(FormatError::Malformed("forest without a root"));
        }
        let parent = r.u32_vec(nodes)?;
        let dfs_in = r.u32_vec(nodes)?;
        let dfs_out = r.u32_vec(nodes)?;
        let psi = r.u32_vec(n as usize)?;
        if psi.iter().any(|&p| p as usize >= nodes) {
            return Err(FormatError::Malformed("psi points outside the forest"));
        }
        forests.push(LaminarForest::from_raw_parts(parent, dfs_in, dfs_out, psi));
    }
    for rec in sources.iter().flatten() {
        let Some(forest) = forests.get(rec.forest as usize) else {
            return Err(FormatError::Malformed("source forest out of range"));
        };
        if rec.node.0 as usize >= forest.len() {
            return Err(FormatError::Malformed("source tree node out of range"));
        }
    }
    Ok(KConnOracle::from_parts(
        k, n, node_cut, critical, sources, forests, cuts,
    ))
}

fn load_general(r: &mut Reader, k: u32, n: u32) -> Result<GeneralOracle, FormatError> {
    let cuts = load_cut_list(r, n)?;
    let adjacent_cuts = r.len()?;
    let nonadjacent_cuts = r.len()?;
    if adjacent_cuts + nonadjacent_cuts != cuts.len() {
        return Err(FormatError::Malformed("cut counts disagree with the list"));
    }
    let cells = (n as usize) * (n as usize);
    let kappa = r.take(cells)?.to_vec();
    if kappa.iter().any(|&v| v as u32 > k + 1) {
        return Err(FormatError::Malformed("kappa entry above the cap"));
    }
    let cut_id = r.u32_vec(cells)?;
    for &id in &cut_id {
        check_cut_id(id, cuts.len())?;
    }
    Ok(GeneralOracle::from_parts(
        k,
        n,
        kappa,
        cut_id,
        cuts,
        GeneralStats {
            adjacent_cuts,
            nonadjacent_cuts,
        },
    ))
}
