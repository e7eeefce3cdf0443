//! Reidemeister–Schreier: presentations of kernels of maps onto explicit
//! finite groups, and the conjugation action on the kernel's rational
//! abelianization.
//!
//! Finite groups are given by raw multiplication tables with the identity at
//! index 0 — no coset enumeration is ever attempted. The Schreier
//! transversal is chosen by breadth-first search with ties broken on
//! (length, generator index, sign), so output presentations are
//! deterministic.

// Multiplication tables, coset tables and pivot grids are walked by raw
// index throughout; range loops are the clearer idiom here.
#![allow(clippy::needless_range_loop)]

use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::presentation::FinitePresentation;
use crate::ratmat::RationalMatrix;
use crate::word::{Letter, Sign, Word};
use crate::{Error, Result};

/// An epimorphism from a presented group onto a finite group given by its
/// multiplication table (`table[a][b] = a·b`, identity at index 0).
#[derive(Clone, Debug)]
pub struct FiniteQuotientMap {
    source: Arc<FinitePresentation>,
    order: usize,
    table: Vec<Vec<usize>>,
    images: Vec<usize>,
}

impl FiniteQuotientMap {
    pub fn new(
        source: Arc<FinitePresentation>,
        table: Vec<Vec<usize>>,
        images: Vec<usize>,
    ) -> Result<FiniteQuotientMap> {
        let order = table.len();
        if order == 0 {
            return Err(Error::BadQuotientTable("table is empty".into()));
        }
        for row in &table {
            if row.len() != order {
                return Err(Error::BadQuotientTable("table is not square".into()));
            }
            if row.iter().any(|&e| e >= order) {
                return Err(Error::BadQuotientTable("entry out of range".into()));
            }
        }
        for a in 0..order {
            if table[0][a] != a || table[a][0] != a {
                return Err(Error::BadQuotientTable(
                    "index 0 is not a two-sided identity".into(),
                ));
            }
        }
        // Latin square: rows and columns are permutations.
        for a in 0..order {
            let mut seen_row = alloc::vec![false; order];
            let mut seen_col = alloc::vec![false; order];
            for b in 0..order {
                seen_row[table[a][b]] = true;
                seen_col[table[b][a]] = true;
            }
            if seen_row.iter().any(|s| !s) || seen_col.iter().any(|s| !s) {
                return Err(Error::BadQuotientTable(format!(
                    "row or column {a} is not a permutation"
                )));
            }
        }
        // two-sided inverses
        for a in 0..order {
            let b = (0..order)
                .find(|&b| table[a][b] == 0)
                .expect("row is a permutation");
            if table[b][a] != 0 {
                return Err(Error::BadQuotientTable(format!(
                    "element {a} has no two-sided inverse"
                )));
            }
        }
        // associativity: exact for small tables, spot-checked beyond
        if order <= 32 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if table[table[a][b]][c] != table[a][table[b][c]] {
                            return Err(Error::BadQuotientTable(format!(
                                "({a}·{b})·{c} ≠ {a}·({b}·{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut state = 0x2545f4914f6cdd1du64;
            for _ in 0..20_000 {
                let mut next = || {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    (state % order as u64) as usize
                };
                let (a, b, c) = (next(), next(), next());
                if table[table[a][b]][c] != table[a][table[b][c]] {
                    return Err(Error::BadQuotientTable(format!(
                        "({a}·{b})·{c} ≠ {a}·({b}·{c})"
                    )));
                }
            }
        }
        if images.len() != source.generator_count() {
            return Err(Error::ValueCountMismatch {
                generators: source.generator_count(),
                values: images.len(),
            });
        }
        if images.iter().any(|&g| g >= order) {
            return Err(Error::BadQuotientTable(
                "generator image out of range".into(),
            ));
        }
        let map = FiniteQuotientMap {
            source,
            order,
            table,
            images,
        };
        for (i, relator) in map.source.relators().iter().enumerate() {
            if map.eval(relator)? != 0 {
                return Err(Error::RelatorNotKilled { relator: i });
            }
        }
        // surjectivity by closure
        let mut reached = alloc::vec![false; order];
        reached[0] = true;
        let mut frontier = alloc::vec![0usize];
        while let Some(a) = frontier.pop() {
            for &g in &map.images {
                let next = map.table[a][g];
                if !reached[next] {
                    reached[next] = true;
                    frontier.push(next);
                }
            }
        }
        if reached.iter().any(|r| !r) {
            return Err(Error::ImagesDoNotGenerate);
        }
        Ok(map)
    }

    pub fn source(&self) -> &Arc<FinitePresentation> {
        &self.source
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse_of(&self, a: usize) -> usize {
        (0..self.order)
            .find(|&b| self.table[a][b] == 0)
            .expect("validated group table")
    }

    /// Image of a word in the finite group.
    pub fn eval(&self, word: &Word) -> Result<usize> {
        word.check_range(self.images.len())?;
        let mut state = 0;
        for letter in word.letters() {
            let g = match letter.sign {
                Sign::Plus => self.images[letter.gen],
                Sign::Minus => self.inverse_of(self.images[letter.gen]),
            };
            state = self.table[state][g];
        }
        Ok(state)
    }

    /// Runs Reidemeister–Schreier and packages everything needed to work
    /// inside the kernel.
    pub fn kernel_presentation(&self) -> SchreierSystem {
        SchreierSystem::build(self.clone())
    }
}

/// Kernel data produced by Reidemeister–Schreier: the kernel presentation,
/// the Schreier transversal, and the rewriting machinery.
#[derive(Clone, Debug)]
pub struct SchreierSystem {
    map: FiniteQuotientMap,
    /// coset representatives, in discovery order (index 0 = identity)
    transversal: Vec<Word>,
    /// group element of each coset index
    element_of: Vec<usize>,
    /// kernel generator index of each non-tree edge; tree edges stay `None`
    /// and vanish under rewriting
    edge_gen: Vec<Vec<Option<usize>>>,
    /// each kernel generator as a word in the source group
    generator_words: Vec<Word>,
    kernel: FinitePresentation,
}

impl SchreierSystem {
    fn build(map: FiniteQuotientMap) -> SchreierSystem {
        let order = map.order;
        let n = map.source.generator_count();
        let mut transversal: Vec<Word> = alloc::vec![Word::empty()];
        let mut element_of = alloc::vec![0usize];
        let mut coset_of = alloc::vec![usize::MAX; order];
        coset_of[0] = 0;
        let mut tree = alloc::vec![alloc::vec![false; n]; order];
        // breadth-first; within one coset explore generators in index order,
        // positive direction before negative
        let mut head = 0;
        while head < transversal.len() {
            let here = element_of[head];
            for x in 0..n {
                for sign in [Sign::Plus, Sign::Minus] {
                    let img = match sign {
                        Sign::Plus => map.images[x],
                        Sign::Minus => map.inverse_of(map.images[x]),
                    };
                    let there = map.table[here][img];
                    if coset_of[there] == usize::MAX {
                        coset_of[there] = transversal.len();
                        element_of.push(there);
                        let mut rep = transversal[head].clone();
                        rep = rep.then(&Word::new(alloc::vec![Letter { gen: x, sign }]));
                        transversal.push(rep);
                        // the tree edge is always recorded in its positive
                        // orientation: source --x--> source·img(x)
                        match sign {
                            Sign::Plus => tree[here][x] = true,
                            Sign::Minus => tree[there][x] = true,
                        }
                    }
                }
            }
            head += 1;
        }
        // kernel generators: one per non-tree edge, enumerated coset-major
        let mut edge_gen = alloc::vec![alloc::vec![None; n]; order];
        let mut names = Vec::new();
        let mut generator_words = Vec::new();
        for t in 0..order {
            let e = element_of[t];
            for x in 0..n {
                if tree[e][x] {
                    continue;
                }
                let target = map.table[e][map.images[x]];
                edge_gen[e][x] = Some(names.len());
                names.push(format!("{}_{}", map.source.generators()[x], t));
                let word = transversal[t]
                    .then(&Word::gen(x))
                    .then(&transversal[coset_of[target]].inverse())
                    .free_reduce();
                generator_words.push(word);
            }
        }
        let mut system = SchreierSystem {
            map,
            transversal,
            element_of,
            edge_gen,
            generator_words,
            kernel: FinitePresentation::trivial(),
        };
        // relators: each source relator rewritten from every coset
        let mut relator_texts: Vec<Word> = Vec::new();
        for t in 0..order {
            for r in system.map.source.relators() {
                let (rewritten, end) = system.rewrite_from(system.element_of[t], r);
                debug_assert_eq!(end, system.element_of[t]);
                let reduced = rewritten.cyclic_reduce();
                if !reduced.is_empty() && !relator_texts.contains(&reduced) {
                    relator_texts.push(reduced);
                }
            }
        }
        system.kernel = FinitePresentation::new(names, relator_texts)
            .expect("Schreier generator names are valid and relators in range");
        system
    }

    pub fn quotient(&self) -> &FiniteQuotientMap {
        &self.map
    }

    pub fn kernel(&self) -> &FinitePresentation {
        &self.kernel
    }

    pub fn transversal(&self) -> &[Word] {
        &self.transversal
    }

    /// Each kernel generator expressed as a word in the source group.
    pub fn generator_words(&self) -> &[Word] {
        &self.generator_words
    }

    fn rewrite_from(&self, start: usize, word: &Word) -> (Word, usize) {
        let mut state = start;
        let mut letters = Vec::new();
        for letter in word.letters() {
            match letter.sign {
                Sign::Plus => {
                    if let Some(g) = self.edge_gen[state][letter.gen] {
                        letters.push(Letter {
                            gen: g,
                            sign: Sign::Plus,
                        });
                    }
                    state = self.map.table[state][self.map.images[letter.gen]];
                }
                Sign::Minus => {
                    let img = self.map.images[letter.gen];
                    let pre = self.map.table[state][self.map.inverse_of(img)];
                    if let Some(g) = self.edge_gen[pre][letter.gen] {
                        letters.push(Letter {
                            gen: g,
                            sign: Sign::Minus,
                        });
                    }
                    state = pre;
                }
            }
        }
        (Word::new(letters).free_reduce(), state)
    }

    /// Rewrites a kernel element as a word in the Schreier generators.
    pub fn rewrite(&self, word: &Word) -> Result<Word> {
        if self.map.eval(word)? != 0 {
            return Err(Error::NotInKernel);
        }
        Ok(self.rewrite_from(0, word).0)
    }

    /// Reduced row echelon form of the kernel relator exponent matrix,
    /// with its pivot columns: the scaffolding for `H1(ker; Q)`.
    fn h1_reduction(&self) -> (RationalMatrix, Vec<usize>) {
        RationalMatrix::from_integer(&self.kernel.exponent_matrix()).rref()
    }

    /// Dimension of `H1(ker; Q)`.
    pub fn h1_dim(&self) -> usize {
        let (rref, pivots) = self.h1_reduction();
        rref.cols() - pivots.len()
    }

    /// Matrix of conjugation by `a` on `H1(ker; Q)`, in the basis of
    /// non-pivot Schreier generator classes. `a` is any word in the source
    /// group (the kernel is normal, so conjugation always restricts).
    pub fn conjugation_matrix(&self, a: &Word) -> Result<RationalMatrix> {
        a.check_range(self.map.source.generator_count())?;
        let (rref, pivots) = self.h1_reduction();
        let k = self.kernel.generator_count();
        let free: Vec<usize> = (0..k).filter(|c| !pivots.contains(c)).collect();
        let dim = free.len();
        let a_inv = a.inverse();
        let mut entries = alloc::vec![BigRational::zero(); dim * dim];
        for (col, &j) in free.iter().enumerate() {
            let conjugate = a.then(&self.generator_words[j]).then(&a_inv).free_reduce();
            let rewritten = self.rewrite(&conjugate)?;
            let mut vec: Vec<BigRational> = rewritten
                .exponent_sums(k)
                .into_iter()
                .map(BigRational::from)
                .collect();
            // reduce modulo the relator row space
            for (row, &p) in pivots.iter().enumerate() {
                let coeff = vec[p].clone();
                if coeff.is_zero() {
                    continue;
                }
                for c in 0..k {
                    let adjust = &coeff * rref.entry(row, c);
                    vec[c] -= adjust;
                }
            }
            for (row, &f) in free.iter().enumerate() {
                entries[row * dim + col] = vec[f].clone();
            }
        }
        RationalMatrix::from_rows(
            (0..dim)
                .map(|r| entries[r * dim..(r + 1) * dim].to_vec())
                .collect(),
            dim,
        )
    }
}

/// Eigenspace dimensions of an involution over `Q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EigensplitReport {
    pub dim_plus: usize,
    pub dim_minus: usize,
    pub total: usize,
}

/// Splits the space under an order-≤2 action into (+1)- and (−1)-eigenspaces.
pub fn eigensplit(m: &RationalMatrix) -> Result<EigensplitReport> {
    if m.rows() != m.cols() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    if !m.mul(m)?.is_identity() {
        return Err(Error::NotAnInvolution);
    }
    let one = BigRational::one();
    let dim_plus = m.eigenspace_dim(&one)?;
    let dim_minus = m.eigenspace_dim(&-one.clone())?;
    Ok(EigensplitReport {
        dim_plus,
        dim_minus,
        total: m.cols(),
    })
}

/// Isotypic multiplicities of `H1(ker; Q)` under the conjugation action of
/// an elementary abelian 2-group quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QaModuleReport {
    /// source generator indices whose images form a minimal generating set
    pub acting_generators: Vec<usize>,
    /// one entry per character of the quotient: the character's sign on each
    /// acting generator, and the multiplicity of its isotypic component
    pub multiplicities: Vec<(Vec<i8>, usize)>,
}

impl QaModuleReport {
    pub fn total_dimension(&self) -> usize {
        self.multiplicities.iter().map(|(_, m)| m).sum()
    }
}

/// Decomposes `H1(ker q; Q)` into isotypic components for the conjugation
/// action of `A = Z_2^s`. Characters are listed with the trivial one first.
pub fn qa_module_multiplicities(q: &FiniteQuotientMap) -> Result<QaModuleReport> {
    let order = q.order();
    for a in 0..order {
        if q.table()[a][a] != 0 {
            return Err(Error::NotElementaryAbelianTwo);
        }
    }
    if !order.is_power_of_two() {
        return Err(Error::NotElementaryAbelianTwo);
    }
    let s = order.trailing_zeros() as usize;

    // greedy minimal generating set from the generator images
    let mut chosen: Vec<usize> = Vec::new();
    let mut span = alloc::vec![false; order];
    span[0] = true;
    let mut span_elements = alloc::vec![0usize];
    for (i, &img) in q.images().iter().enumerate() {
        if span[img] {
            continue;
        }
        chosen.push(i);
        let doubled: Vec<usize> = span_elements.iter().map(|&e| q.table()[e][img]).collect();
        for &e in &doubled {
            span[e] = true;
        }
        span_elements.extend(doubled);
        if span_elements.len() == order {
            break;
        }
    }
    debug_assert_eq!(chosen.len(), s);

    let system = q.kernel_presentation();
    let k = system.h1_dim();
    let matrices: Vec<RationalMatrix> = chosen
        .iter()
        .map(|&i| system.conjugation_matrix(&Word::gen(i)))
        .collect::<Result<Vec<_>>>()?;
    for m in &matrices {
        if !m.mul(m)?.is_identity() {
            return Err(Error::NotAnInvolution);
        }
    }

    let mut multiplicities = Vec::with_capacity(1 << s);
    for mask in 0..(1u32 << s) {
        let signs: Vec<i8> = (0..s)
            .map(|i| if mask >> i & 1 == 0 { 1 } else { -1 })
            .collect();
        // joint eigenspace: null space of the stacked (M_i - ε_i·I)
        let mut rows: Vec<Vec<BigRational>> = Vec::with_capacity(s * k);
        for (i, m) in matrices.iter().enumerate() {
            let eps = BigRational::from_integer(signs[i].into());
            for r in 0..k {
                let mut row = Vec::with_capacity(k);
                for c in 0..k {
                    let mut v = m.entry(r, c).clone();
                    if r == c {
                        v -= &eps;
                    }
                    row.push(v);
                }
                rows.push(row);
            }
        }
        let stacked = RationalMatrix::from_rows(rows, k)?;
        multiplicities.push((signs, k - stacked.rank()));
    }
    Ok(QaModuleReport {
        acting_generators: chosen,
        multiplicities,
    })
}

/// Whether `H1(ker q; Q)` splits as one copy of the sign representation
/// plus a trivial part, for an index-2 kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExcessiveHypothesisReport {
    pub holds: bool,
    /// dimension of the fixed part
    pub t: usize,
}

pub fn excessive_hypothesis(q: &FiniteQuotientMap) -> Result<ExcessiveHypothesisReport> {
    if q.order() != 2 {
        return Err(Error::NotElementaryAbelianTwo);
    }
    let acting = q
        .images()
        .iter()
        .position(|&img| img != 0)
        .expect("images generate, so one is nontrivial");
    let system = q.kernel_presentation();
    let split = eigensplit(&system.conjugation_matrix(&Word::gen(acting))?)?;
    Ok(ExcessiveHypothesisReport {
        holds: split.dim_minus == 1,
        t: split.dim_plus,
    })
}

/// Multiplication table of the cyclic group `Z_d`.
pub fn cyclic_table(d: usize) -> Vec<Vec<usize>> {
    (0..d)
        .map(|a| (0..d).map(|b| (a + b) % d).collect())
        .collect()
}

/// Multiplication table of `Z_2^s`, elements indexed by bitmask.
pub fn elementary_abelian_table(s: usize) -> Vec<Vec<usize>> {
    let order = 1usize << s;
    (0..order)
        .map(|a| (0..order).map(|b| a ^ b).collect())
        .collect()
}
