//! Vertical path words over a graph of categories, the free double
//! category they form, and the word monad's unit and multiplication.
//!
//! A *path word* is a composable chain of vertical arrows; a *cell word*
//! is a chain of cells glued along matching boundary arrows.  Cell words
//! compose transversally letter by letter and vertically by
//! concatenation, which makes the words over a graph into a double
//! category that is strict on the nose: two words are equal exactly when
//! they are the same sequence.  Block and deep words (words of words,
//! possibly with empty blocks) drive the flattening laws and every
//! re-bracketing sweep in [`super::algebra`].

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::chiral::{LevelMap, TvArrow, TvCat};
use crate::error::{KernelError, Result};

use super::CatGraph;

/// A composable chain of vertical arrows.  `base` is the start object,
/// which carries all the information for the empty word; for nonempty
/// words it is kept normalised to the start object of the first letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathWord {
    pub base: u32,
    pub letters: Vec<u32>,
}

impl PathWord {
    /// Build a word, checking bounds, chaining and base normalisation.
    pub fn new(g: &CatGraph, base: u32, letters: Vec<u32>) -> Result<PathWord> {
        if base >= g.base.n_cubes() {
            return Err(KernelError::Malformed(format!(
                "word base object #{base} out of range"
            )));
        }
        for &u in &letters {
            if u >= g.vert.n_cubes() {
                return Err(KernelError::Malformed(format!(
                    "word letter #{u} out of range"
                )));
            }
        }
        let w = PathWord { base, letters };
        if let Some(&first) = w.letters.first() {
            if g.src_obj(first) != w.base {
                return Err(KernelError::Malformed(format!(
                    "word base {} is not the start of {}",
                    g.base.cube_label(w.base),
                    g.vert.cube_label(first)
                )));
            }
        }
        for pair in w.letters.windows(2) {
            if g.tgt_obj(pair[0]) != g.src_obj(pair[1]) {
                return Err(KernelError::NotComposable {
                    lhs: g.vert.cube_label(pair[0]),
                    rhs: g.vert.cube_label(pair[1]),
                    dir: 1,
                });
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Start object.
    pub fn src_obj(&self) -> u32 {
        self.base
    }

    /// End object.
    pub fn tgt_obj(&self, g: &CatGraph) -> u32 {
        match self.letters.last() {
            Some(&u) => g.tgt_obj(u),
            None => self.base,
        }
    }

    pub fn label(&self, g: &CatGraph) -> String {
        if self.letters.is_empty() {
            format!("e({})", g.base.cube_label(self.base))
        } else {
            self.letters
                .iter()
                .map(|&u| g.vert.cube_label(u))
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// The empty path word anchored at an object.
pub fn empty_word(x: u32) -> PathWord {
    PathWord { base: x, letters: Vec::new() }
}

/// The singleton word on one vertical arrow.
pub fn letter_word(g: &CatGraph, u: u32) -> PathWord {
    PathWord { base: g.src_obj(u), letters: vec![u] }
}

/// A chain of cells glued along matching boundary arrows.  `base` is the
/// negative boundary arrow, which identifies the empty cell word `e(f)`;
/// for nonempty words it is normalised to the negative face of the first
/// letter.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CellWord {
    pub base: u32,
    pub letters: Vec<u32>,
}

impl CellWord {
    /// Build a cell word, checking bounds, chaining and normalisation.
    pub fn new(g: &CatGraph, base: u32, letters: Vec<u32>) -> Result<CellWord> {
        if base >= g.base.n_arrows() {
            return Err(KernelError::Malformed(format!(
                "cell word base arrow #{base} out of range"
            )));
        }
        for &a in &letters {
            if a >= g.vert.n_arrows() {
                return Err(KernelError::Malformed(format!(
                    "cell word letter #{a} out of range"
                )));
            }
        }
        let w = CellWord { base, letters };
        if let Some(&first) = w.letters.first() {
            if g.neg_face(first) != w.base {
                return Err(KernelError::Malformed(format!(
                    "cell word base {} is not the negative face of {}",
                    g.base.arrow_label(w.base),
                    g.vert.arrow_label(first)
                )));
            }
        }
        for pair in w.letters.windows(2) {
            if g.pos_face(pair[0]) != g.neg_face(pair[1]) {
                return Err(KernelError::NotComposable {
                    lhs: g.vert.arrow_label(pair[0]),
                    rhs: g.vert.arrow_label(pair[1]),
                    dir: 1,
                });
            }
        }
        Ok(w)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Negative boundary arrow.
    pub fn neg_face(&self) -> u32 {
        self.base
    }

    /// Positive boundary arrow.
    pub fn pos_face(&self, g: &CatGraph) -> u32 {
        match self.letters.last() {
            Some(&a) => g.pos_face(a),
            None => self.base,
        }
    }

    /// The word of transversal sources.
    pub fn src_word(&self, g: &CatGraph) -> PathWord {
        match self.letters.first() {
            None => empty_word(g.base.src(self.base)),
            Some(&first) => PathWord {
                base: g.src_obj(g.vert.src(first)),
                letters: self.letters.iter().map(|&a| g.vert.src(a)).collect(),
            },
        }
    }

    /// The word of transversal targets.
    pub fn tgt_word(&self, g: &CatGraph) -> PathWord {
        match self.letters.first() {
            None => empty_word(g.base.tgt(self.base)),
            Some(&first) => PathWord {
                base: g.src_obj(g.vert.tgt(first)),
                letters: self.letters.iter().map(|&a| g.vert.tgt(a)).collect(),
            },
        }
    }

    pub fn label(&self, g: &CatGraph) -> String {
        if self.letters.is_empty() {
            format!("e({})", g.base.arrow_label(self.base))
        } else {
            self.letters
                .iter()
                .map(|&a| g.vert.arrow_label(a))
                .collect::<Vec<_>>()
                .join("·")
        }
    }
}

/// The empty cell word on a boundary arrow.
pub fn empty_cell_word(f: u32) -> CellWord {
    CellWord { base: f, letters: Vec::new() }
}

/// The singleton cell word on one cell.
pub fn letter_cell(g: &CatGraph, a: u32) -> CellWord {
    CellWord { base: g.neg_face(a), letters: vec![a] }
}

/// The identity cell word on a path word.
pub fn identity_cell_word(g: &CatGraph, w: &PathWord) -> CellWord {
    CellWord {
        base: g.base.ids[w.base as usize],
        letters: w.letters.iter().map(|&u| g.vert.ids[u as usize]).collect(),
    }
}

/// Pointwise transversal composition of two cell words.
pub fn hcompose_cells(g: &CatGraph, x: &CellWord, y: &CellWord) -> Result<CellWord> {
    if x.len() != y.len() {
        return Err(KernelError::NotComposable {
            lhs: x.label(g),
            rhs: y.label(g),
            dir: 0,
        });
    }
    if x.letters.is_empty() {
        return Ok(empty_cell_word(g.base.compose0(x.base, y.base)?));
    }
    let letters = x
        .letters
        .iter()
        .zip(&y.letters)
        .map(|(&a, &b)| g.vert.compose0(a, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(CellWord { base: g.neg_face(letters[0]), letters })
}

/// Vertical concatenation of two path words.
pub fn vstack_words(g: &CatGraph, x: &PathWord, y: &PathWord) -> Result<PathWord> {
    if x.tgt_obj(g) != y.src_obj() {
        return Err(KernelError::NotComposable {
            lhs: x.label(g),
            rhs: y.label(g),
            dir: 1,
        });
    }
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    Ok(PathWord { base: x.base, letters })
}

/// Vertical concatenation of two cell words.
pub fn vstack_cells(g: &CatGraph, x: &CellWord, y: &CellWord) -> Result<CellWord> {
    if x.pos_face(g) != y.neg_face() {
        return Err(KernelError::NotComposable {
            lhs: x.label(g),
            rhs: y.label(g),
            dir: 1,
        });
    }
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    Ok(CellWord { base: x.base, letters })
}

// ----------------------------------------------------------------------
// Block and deep words
// ----------------------------------------------------------------------

/// A word of words: consecutive blocks chain end object to start object,
/// and blocks may be empty.  `base` anchors the whole thing when there are
/// no blocks at all.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockWord {
    pub base: u32,
    pub blocks: Vec<PathWord>,
}

impl BlockWord {
    /// Letters plus empty blocks: the size measure bounded by the sweep
    /// budgets.
    pub fn weight(&self) -> usize {
        self.blocks
            .iter()
            .map(|b| b.len().max(1))
            .sum()
    }

    pub fn label(&self, g: &CatGraph) -> String {
        if self.blocks.is_empty() {
            return format!("()@{}", g.base.cube_label(self.base));
        }
        self.blocks
            .iter()
            .map(|b| {
                if b.is_empty() {
                    "()".to_string()
                } else {
                    format!("({})", b.label(g))
                }
            })
            .collect()
    }
}

/// A word of block words, for the flattening-associativity and pentagon
/// sweeps.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeepWord {
    pub base: u32,
    pub blocks: Vec<BlockWord>,
}

impl DeepWord {
    pub fn label(&self, g: &CatGraph) -> String {
        if self.blocks.is_empty() {
            return format!("[]@{}", g.base.cube_label(self.base));
        }
        self.blocks
            .iter()
            .map(|b| format!("[{}]", b.label(g)))
            .collect()
    }
}

/// A word of cell words, glued along boundary arrows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BlockCellWord {
    pub base: u32,
    pub blocks: Vec<CellWord>,
}

impl BlockCellWord {
    pub fn label(&self, g: &CatGraph) -> String {
        if self.blocks.is_empty() {
            return format!("()@{}", g.base.arrow_label(self.base));
        }
        self.blocks
            .iter()
            .map(|b| {
                if b.is_empty() {
                    "()".to_string()
                } else {
                    format!("({})", b.label(g))
                }
            })
            .collect()
    }

    /// The block word of transversal sources.
    pub fn src_blocks(&self, g: &CatGraph) -> BlockWord {
        BlockWord {
            base: g.base.src(self.base),
            blocks: self.blocks.iter().map(|b| b.src_word(g)).collect(),
        }
    }

    /// The block word of transversal targets.
    pub fn tgt_blocks(&self, g: &CatGraph) -> BlockWord {
        BlockWord {
            base: g.base.tgt(self.base),
            blocks: self.blocks.iter().map(|b| b.tgt_word(g)).collect(),
        }
    }
}

/// A word of block cell words.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeepCellWord {
    pub base: u32,
    pub blocks: Vec<BlockCellWord>,
}

// ----------------------------------------------------------------------
// Unit and multiplication of the word monad
// ----------------------------------------------------------------------

/// One block holding the whole word.
pub fn single_block(w: &PathWord) -> BlockWord {
    BlockWord { base: w.base, blocks: vec![w.clone()] }
}

/// One singleton block per letter.
pub fn split_letters(g: &CatGraph, w: &PathWord) -> BlockWord {
    BlockWord {
        base: w.base,
        blocks: w.letters.iter().map(|&u| letter_word(g, u)).collect(),
    }
}

/// Concatenate the blocks back into a plain word.
pub fn flatten_blocks(bw: &BlockWord) -> PathWord {
    PathWord {
        base: bw.base,
        letters: bw.blocks.iter().flat_map(|b| b.letters.iter().copied()).collect(),
    }
}

/// One block holding the whole cell word.
pub fn single_cell_block(cw: &CellWord) -> BlockCellWord {
    BlockCellWord { base: cw.base, blocks: vec![cw.clone()] }
}

/// One singleton block per cell letter.
pub fn split_cell_letters(g: &CatGraph, cw: &CellWord) -> BlockCellWord {
    BlockCellWord {
        base: cw.base,
        blocks: cw.letters.iter().map(|&a| letter_cell(g, a)).collect(),
    }
}

/// Concatenate the cell blocks back into a plain cell word.
pub fn flatten_cell_blocks(bcw: &BlockCellWord) -> CellWord {
    CellWord {
        base: bcw.base,
        letters: bcw.blocks.iter().flat_map(|b| b.letters.iter().copied()).collect(),
    }
}

/// Flatten the outer layer of a deep word, keeping the inner blocks.
pub fn flatten_outer(d: &DeepWord) -> BlockWord {
    BlockWord {
        base: d.base,
        blocks: d.blocks.iter().flat_map(|b| b.blocks.iter().cloned()).collect(),
    }
}

/// Flatten every outer block of a deep word, keeping the outer layer.
pub fn flatten_inner(d: &DeepWord) -> BlockWord {
    BlockWord {
        base: d.base,
        blocks: d.blocks.iter().map(flatten_blocks).collect(),
    }
}

/// Flatten the outer layer of a deep cell word.
pub fn flatten_cell_outer(d: &DeepCellWord) -> BlockCellWord {
    BlockCellWord {
        base: d.base,
        blocks: d.blocks.iter().flat_map(|b| b.blocks.iter().cloned()).collect(),
    }
}

/// Flatten every outer block of a deep cell word.
pub fn flatten_cell_inner(d: &DeepCellWord) -> BlockCellWord {
    BlockCellWord {
        base: d.base,
        blocks: d.blocks.iter().map(flatten_cell_blocks).collect(),
    }
}

// ----------------------------------------------------------------------
// Enumeration
// ----------------------------------------------------------------------

/// All path words of length at most `max_len`, ordered by length and then
/// by construction order within each length.
pub fn path_words(g: &CatGraph, max_len: usize) -> Vec<PathWord> {
    let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); g.base.n_cubes() as usize];
    for u in 0..g.vert.n_cubes() {
        by_src[g.src_obj(u) as usize].push(u);
    }
    let mut out: Vec<PathWord> = (0..g.base.n_cubes()).map(empty_word).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &u in &by_src[w.tgt_obj(g) as usize] {
                let mut letters = w.letters.clone();
                letters.push(u);
                let base = if w.letters.is_empty() { g.src_obj(u) } else { w.base };
                next.push(PathWord { base, letters });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}

/// All cell words of length at most `max_len`, ordered as in
/// [`path_words`].
pub fn cell_words(g: &CatGraph, max_len: usize) -> Vec<CellWord> {
    let mut by_neg: Vec<Vec<u32>> = vec![Vec::new(); g.base.n_arrows() as usize];
    for a in 0..g.vert.n_arrows() {
        by_neg[g.neg_face(a) as usize].push(a);
    }
    let mut out: Vec<CellWord> = (0..g.base.n_arrows()).map(empty_cell_word).collect();
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &a in &by_neg[w.pos_face(g) as usize] {
                let mut letters = w.letters.clone();
                letters.push(a);
                let base = if w.letters.is_empty() { g.neg_face(a) } else { w.base };
                next.push(CellWord { base, letters });
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    out
}

/// One block of a splitting shape: an empty block at the current cut, or a
/// half-open letter range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Piece {
    Empty,
    Range(usize, usize),
}

fn piece_weight(ps: &[Piece]) -> usize {
    ps.iter()
        .map(|p| match p {
            Piece::Empty => 1,
            Piece::Range(i, j) => j - i,
        })
        .sum()
}

/// All ways of splitting `k` letters into consecutive blocks, allowing
/// empty blocks as long as letters plus empty blocks stay within `budget`.
fn splittings(k: usize, budget: usize) -> Vec<Vec<Piece>> {
    fn rec(
        k: usize,
        budget: usize,
        i: usize,
        weight: usize,
        acc: &mut Vec<Piece>,
        out: &mut Vec<Vec<Piece>>,
    ) {
        if i == k {
            out.push(acc.clone());
        }
        if weight < budget {
            acc.push(Piece::Empty);
            rec(k, budget, i, weight + 1, acc, out);
            acc.pop();
        }
        for j in (i + 1)..=k {
            if weight + (j - i) <= budget {
                acc.push(Piece::Range(i, j));
                rec(k, budget, j, weight + (j - i), acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, budget, 0, 0, &mut Vec::new(), &mut out);
    out
}

/// One outer block of a two-level splitting shape.
#[derive(Debug, Clone, PartialEq, Eq)]
enum DeepPiece {
    Empty,
    Block(Vec<Piece>),
}

/// All two-level splittings of `k` letters within the weight budget, where
/// the weight counts letters plus empty blocks at either level.
fn deep_splittings(k: usize, budget: usize) -> Vec<Vec<DeepPiece>> {
    fn rec(
        k: usize,
        budget: usize,
        i: usize,
        weight: usize,
        acc: &mut Vec<DeepPiece>,
        out: &mut Vec<Vec<DeepPiece>>,
    ) {
        if i == k {
            out.push(acc.clone());
        }
        if weight < budget {
            acc.push(DeepPiece::Empty);
            rec(k, budget, i, weight + 1, acc, out);
            acc.pop();
        }
        for j in (i + 1)..=k {
            if weight + (j - i) > budget {
                continue;
            }
            for inner in splittings(j - i, budget - weight) {
                let shifted: Vec<Piece> = inner
                    .iter()
                    .map(|p| match p {
                        Piece::Empty => Piece::Empty,
                        Piece::Range(a, b) => Piece::Range(a + i, b + i),
                    })
                    .collect();
                let cost = piece_weight(&shifted);
                acc.push(DeepPiece::Block(shifted));
                rec(k, budget, j, weight + cost, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(k, budget, 0, 0, &mut Vec::new(), &mut out);
    out
}

fn cut_obj(g: &CatGraph, w: &PathWord, i: usize) -> u32 {
    if i == 0 {
        w.base
    } else {
        g.tgt_obj(w.letters[i - 1])
    }
}

fn cut_face(g: &CatGraph, cw: &CellWord, i: usize) -> u32 {
    if i == 0 {
        cw.base
    } else {
        g.pos_face(cw.letters[i - 1])
    }
}

fn word_from_pieces(g: &CatGraph, w: &PathWord, ps: &[Piece], start: usize) -> BlockWord {
    let mut blocks = Vec::with_capacity(ps.len());
    let mut pos = start;
    for p in ps {
        match p {
            Piece::Empty => blocks.push(empty_word(cut_obj(g, w, pos))),
            Piece::Range(i, j) => {
                blocks.push(PathWord {
                    base: cut_obj(g, w, *i),
                    letters: w.letters[*i..*j].to_vec(),
                });
                pos = *j;
            }
        }
    }
    BlockWord { base: cut_obj(g, w, start), blocks }
}

fn cells_from_pieces(g: &CatGraph, cw: &CellWord, ps: &[Piece], start: usize) -> BlockCellWord {
    let mut blocks = Vec::with_capacity(ps.len());
    let mut pos = start;
    for p in ps {
        match p {
            Piece::Empty => blocks.push(empty_cell_word(cut_face(g, cw, pos))),
            Piece::Range(i, j) => {
                blocks.push(CellWord {
                    base: cut_face(g, cw, *i),
                    letters: cw.letters[*i..*j].to_vec(),
                });
                pos = *j;
            }
        }
    }
    BlockCellWord { base: cut_face(g, cw, start), blocks }
}

/// All block words flattening to `w` whose weight stays within `budget`.
pub fn block_words_of(g: &CatGraph, w: &PathWord, budget: usize) -> Vec<BlockWord> {
    splittings(w.len(), budget)
        .iter()
        .map(|ps| word_from_pieces(g, w, ps, 0))
        .collect()
}

/// All deep words flattening (twice) to `w` within the weight budget.
pub fn deep_words_of(g: &CatGraph, w: &PathWord, budget: usize) -> Vec<DeepWord> {
    deep_splittings(w.len(), budget)
        .iter()
        .map(|dps| {
            let mut blocks = Vec::with_capacity(dps.len());
            let mut pos = 0usize;
            for dp in dps {
                match dp {
                    DeepPiece::Empty => blocks.push(BlockWord {
                        base: cut_obj(g, w, pos),
                        blocks: Vec::new(),
                    }),
                    DeepPiece::Block(ps) => {
                        blocks.push(word_from_pieces(g, w, ps, pos));
                        if let Some(Piece::Range(_, j)) =
                            ps.iter().rev().find(|p| matches!(p, Piece::Range(..)))
                        {
                            pos = *j;
                        }
                    }
                }
            }
            DeepWord { base: w.base, blocks }
        })
        .collect()
}

/// All block cell words flattening to `cw` within the weight budget.
pub fn cell_block_words_of(g: &CatGraph, cw: &CellWord, budget: usize) -> Vec<BlockCellWord> {
    splittings(cw.len(), budget)
        .iter()
        .map(|ps| cells_from_pieces(g, cw, ps, 0))
        .collect()
}

/// All deep cell words flattening (twice) to `cw` within the weight
/// budget.
pub fn deep_cell_words_of(g: &CatGraph, cw: &CellWord, budget: usize) -> Vec<DeepCellWord> {
    deep_splittings(cw.len(), budget)
        .iter()
        .map(|dps| {
            let mut blocks = Vec::with_capacity(dps.len());
            let mut pos = 0usize;
            for dp in dps {
                match dp {
                    DeepPiece::Empty => blocks.push(BlockCellWord {
                        base: cut_face(g, cw, pos),
                        blocks: Vec::new(),
                    }),
                    DeepPiece::Block(ps) => {
                        blocks.push(cells_from_pieces(g, cw, ps, pos));
                        if let Some(Piece::Range(_, j)) =
                            ps.iter().rev().find(|p| matches!(p, Piece::Range(..)))
                        {
                            pos = *j;
                        }
                    }
                }
            }
            DeepCellWord { base: cw.base, blocks }
        })
        .collect()
}

// ----------------------------------------------------------------------
// The free double category
// ----------------------------------------------------------------------

/// The free double category on a graph, tabulated up to a word length:
/// vertical arrows are path words, cells are cell words, transversal
/// composition is pointwise and vertical composition is concatenation.
#[derive(Debug, Clone)]
pub struct FreeDouble {
    pub graph: CatGraph,
    pub max_len: usize,
    pub words: Vec<PathWord>,
    pub cells: Vec<CellWord>,
    windex: BTreeMap<(u32, Vec<u32>), u32>,
    cindex: BTreeMap<(u32, Vec<u32>), u32>,
}

/// Tabulate the free double category on `g` up to word length `max_len`.
pub fn free_double(g: &CatGraph, max_len: usize) -> FreeDouble {
    let words = path_words(g, max_len);
    let cells = cell_words(g, max_len);
    let windex = words
        .iter()
        .enumerate()
        .map(|(i, w)| ((w.base, w.letters.clone()), i as u32))
        .collect();
    let cindex = cells
        .iter()
        .enumerate()
        .map(|(i, c)| ((c.base, c.letters.clone()), i as u32))
        .collect();
    FreeDouble { graph: g.clone(), max_len, words, cells, windex, cindex }
}

impl FreeDouble {
    pub fn word_index(&self, w: &PathWord) -> Option<u32> {
        self.windex.get(&(w.base, w.letters.clone())).copied()
    }

    pub fn cell_index(&self, c: &CellWord) -> Option<u32> {
        self.cindex.get(&(c.base, c.letters.clone())).copied()
    }

    /// The tabulated words and cells as a graph of categories: the level-1
    /// slice of the free double category, with pointwise transversal
    /// composition.
    pub fn as_graph(&self) -> CatGraph {
        let g = &self.graph;
        let arrows: Vec<TvArrow> = self
            .cells
            .iter()
            .map(|c| TvArrow {
                name: c.label(g),
                src: self.word_index(&c.src_word(g)).expect("source word within bound"),
                tgt: self.word_index(&c.tgt_word(g)).expect("target word within bound"),
            })
            .collect();
        let ids: Vec<u32> = self
            .words
            .iter()
            .map(|w| {
                self.cell_index(&identity_cell_word(g, w)).expect("identity word within bound")
            })
            .collect();
        let mut by_src: Vec<Vec<u32>> = vec![Vec::new(); self.words.len()];
        for (ci, arr) in arrows.iter().enumerate() {
            by_src[arr.src as usize].push(ci as u32);
        }
        let mut comp = BTreeMap::new();
        for (ci, arr) in arrows.iter().enumerate() {
            for &cj in &by_src[arr.tgt as usize] {
                let composite = hcompose_cells(g, &self.cells[ci], &self.cells[cj as usize])
                    .expect("pointwise composite of parallel cell words");
                let idx = self.cell_index(&composite).expect("composite within bound");
                comp.insert((ci as u32, cj), idx);
            }
        }
        let vert = TvCat {
            cubes: self.words.iter().map(|w| w.label(g)).collect(),
            arrows,
            ids,
            comp,
        };
        let neg = LevelMap {
            on_cubes: self.words.iter().map(|w| w.src_obj()).collect(),
            on_arrows: self.cells.iter().map(|c| c.neg_face()).collect(),
        };
        let pos = LevelMap {
            on_cubes: self.words.iter().map(|w| w.tgt_obj(g)).collect(),
            on_arrows: self.cells.iter().map(|c| c.pos_face(g)).collect(),
        };
        CatGraph {
            name: format!("free({},{})", g.name, self.max_len),
            base: g.base.clone(),
            vert,
            neg,
            pos,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitting_counts() {
        // Compositions of 4 letters with no room for empty blocks.
        assert_eq!(splittings(4, 4).len(), 8);
        // The empty word splits into 0..=4 empty blocks.
        assert_eq!(splittings(0, 4).len(), 5);
        // One letter, budget 3: the block plus 0..=2 empties on either side.
        let one = splittings(1, 3);
        assert_eq!(one.len(), 1 + 2 + 3);
    }

    #[test]
    fn deep_splitting_weights() {
        for shape in deep_splittings(3, 4) {
            let w: usize = shape
                .iter()
                .map(|dp| match dp {
                    DeepPiece::Empty => 1,
                    DeepPiece::Block(ps) => piece_weight(ps),
                })
                .sum();
            assert!(w <= 4);
        }
    }
}
