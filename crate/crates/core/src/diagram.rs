//! Based chord diagrams (the combinatorial content of a Gauss diagram),
//! partial states, and the constructions that act on them: canonical
//! relabelling, mirror images, pretzel-knot codes and the double-cover
//! diagrams used to reduce unoriented smoothings to oriented ones.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Chord label. Labels are 1-based.
pub type Label = usize;

/// Local writhe of the crossing behind a chord endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

/// Whether the strand passes over or under at this visit of the crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Passage {
    Over,
    Under,
}

/// Optional decoration attached to one occurrence of a label in a Gauss code.
///
/// Loop counting never looks at these; they are carried so that codes
/// written with arrow and sign information survive a parse/print cycle.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Annotation {
    pub sign: Option<Sign>,
    pub passage: Option<Passage>,
}

impl Annotation {
    pub fn is_empty(&self) -> bool {
        self.sign.is_none() && self.passage.is_none()
    }
}

impl fmt::Display for Annotation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Some(Sign::Positive) => f.write_str("+")?,
            Some(Sign::Negative) => f.write_str("-")?,
            None => {}
        }
        match self.passage {
            Some(Passage::Over) => f.write_str("o"),
            Some(Passage::Under) => f.write_str("u"),
            None => Ok(()),
        }
    }
}

/// A chord diagram on a based circle, stored as the double-occurrence word
/// read counter-clockwise from the basepoint.
///
/// Every label in `1..=n` occurs exactly twice. The labelling is arbitrary
/// unless the diagram came out of [`ChordDiagram::parse`] or
/// [`ChordDiagram::canonical_relabel`], in which case first occurrences
/// appear in increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChordDiagram {
    word: Vec<Label>,
    ends: Vec<[usize; 2]>,
    annotations: Option<Vec<Annotation>>,
}

impl ChordDiagram {
    /// The diagram with no chords.
    pub fn empty() -> Self {
        ChordDiagram {
            word: Vec::new(),
            ends: Vec::new(),
            annotations: None,
        }
    }

    /// Builds a diagram from a word over `1..=n`, keeping the labels as given.
    pub fn from_word(word: Vec<Label>) -> Result<Self> {
        if !word.len().is_multiple_of(2) {
            return Err(Error::MalformedCode(format!(
                "odd number of endpoints ({})",
                word.len()
            )));
        }
        let n = word.len() / 2;
        let mut ends = vec![[usize::MAX; 2]; n];
        for (pos, &label) in word.iter().enumerate() {
            if label == 0 || label > n {
                return Err(Error::MalformedCode(format!(
                    "label {label} outside 1..={n}"
                )));
            }
            let slot = &mut ends[label - 1];
            if slot[0] == usize::MAX {
                slot[0] = pos;
            } else if slot[1] == usize::MAX {
                slot[1] = pos;
            } else {
                return Err(Error::MalformedCode(format!(
                    "label {label} occurs more than twice"
                )));
            }
        }
        if let Some(i) = ends.iter().position(|e| e[1] == usize::MAX) {
            return Err(Error::MalformedCode(format!(
                "label {} occurs only once",
                i + 1
            )));
        }
        Ok(ChordDiagram {
            word,
            ends,
            annotations: None,
        })
    }

    /// Builds a diagram from a word whose labels are arbitrary positive
    /// integers, renaming them to `1..=n` in order of first occurrence.
    pub fn from_labels(labels: &[u64]) -> Result<Self> {
        let mut rename: HashMap<u64, Label> = HashMap::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut word = Vec::with_capacity(labels.len());
        for &raw in labels {
            if raw == 0 {
                return Err(Error::MalformedCode("label 0 is not allowed".into()));
            }
            let next = rename.len() + 1;
            let label = *rename.entry(raw).or_insert(next);
            if label == next {
                counts.push(0);
            }
            counts[label - 1] += 1;
            word.push(label);
        }
        for (&raw, &label) in &rename {
            let c = counts[label - 1];
            if c != 2 {
                return Err(Error::MalformedCode(format!(
                    "label {raw} occurs {c} time{}",
                    if c == 1 { "" } else { "s" }
                )));
            }
        }
        Self::from_word(word)
    }

    /// Parses a whitespace-separated Gauss code.
    ///
    /// Each token is a positive integer label, optionally followed by an
    /// annotation suffix made of at most one sign (`+`/`-`) and at most one
    /// passage marker (`o` over, `u` under), e.g. `3+o`. Labels are renamed
    /// to `1..=n` in order of first occurrence, which is the canonical
    /// ordering. An empty token stream yields the empty diagram.
    pub fn parse(text: &str) -> Result<Self> {
        let mut labels = Vec::new();
        let mut annotations = Vec::new();
        for token in text.split_whitespace() {
            let (label, annotation) = parse_token(token)?;
            labels.push(label);
            annotations.push(annotation);
        }
        let mut d = Self::from_labels(&labels)?;
        if annotations.iter().any(|a| !a.is_empty()) {
            d.annotations = Some(annotations);
        }
        Ok(d)
    }

    /// Number of chords.
    pub fn len(&self) -> usize {
        self.ends.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ends.is_empty()
    }

    pub fn word(&self) -> &[Label] {
        &self.word
    }

    /// Positions (0-based, in the word) of the first and second endpoint of
    /// `label`, i.e. of `a_label` and `b_label`.
    pub fn endpoints(&self, label: Label) -> [usize; 2] {
        self.ends[label - 1]
    }

    /// Per-occurrence annotations, aligned with [`word`](Self::word).
    pub fn annotations(&self) -> Option<&[Annotation]> {
        self.annotations.as_deref()
    }

    /// Drops all annotations.
    pub fn without_annotations(mut self) -> Self {
        self.annotations = None;
        self
    }

    /// True if first occurrences of labels appear as `1, 2, ..., n`.
    pub fn is_canonical(&self) -> bool {
        let mut next = 1;
        for &l in &self.word {
            if l == next {
                next += 1;
            } else if l > next {
                return false;
            }
        }
        true
    }

    /// Whether chords `i` and `j` cross, i.e. exactly one endpoint of `j`
    /// lies strictly between the endpoints of `i`.
    pub fn interlaced(&self, i: Label, j: Label) -> bool {
        let [a, b] = self.ends[i - 1];
        let [c, d] = self.ends[j - 1];
        ((a < c) && (c < b)) != ((a < d) && (d < b))
    }

    /// Relabels chords in the canonical ordering: the chord owning the first
    /// endpoint after the basepoint is 1, it is deleted, and the procedure
    /// repeats on what remains. Deleting a chord never changes the relative
    /// order of the remaining first endpoints, so this is the order of first
    /// occurrences.
    pub fn canonical_relabel(&self) -> ChordDiagram {
        self.canonical_relabel_with_map().0
    }

    /// Like [`canonical_relabel`](Self::canonical_relabel), also returning the
    /// map `old label -> new label` (indexed by `old - 1`).
    pub fn canonical_relabel_with_map(&self) -> (ChordDiagram, Vec<Label>) {
        let n = self.len();
        let mut map = vec![0; n];
        let mut next = 1;
        for &l in &self.word {
            if map[l - 1] == 0 {
                map[l - 1] = next;
                next += 1;
            }
        }
        let word = self.word.iter().map(|&l| map[l - 1]).collect();
        let mut d = ChordDiagram::from_word(word).expect("relabelling preserves validity");
        d.annotations = self.annotations.clone();
        (d, map)
    }

    /// The mirror image: the word read backwards (a reflection of the circle
    /// fixing the basepoint), canonically relabelled.
    pub fn mirror(&self) -> Mirror {
        let word: Vec<Label> = self.word.iter().rev().copied().collect();
        let mut reversed = ChordDiagram::from_word(word).expect("reversal preserves validity");
        reversed.annotations = self
            .annotations
            .as_ref()
            .map(|a| a.iter().rev().copied().collect());
        let (diagram, tau) = reversed.canonical_relabel_with_map();
        Mirror { diagram, tau }
    }

    /// The sub-diagram on the chords for which `keep` holds, canonically
    /// relabelled. Also returns the original label of every new label.
    pub fn restrict<F: Fn(Label) -> bool>(&self, keep: F) -> (ChordDiagram, Vec<Label>) {
        let n = self.len();
        let mut map = vec![0; n];
        let mut origin = Vec::new();
        let mut word = Vec::new();
        for &l in &self.word {
            if !keep(l) {
                continue;
            }
            if map[l - 1] == 0 {
                origin.push(l);
                map[l - 1] = origin.len();
            }
            word.push(map[l - 1]);
        }
        let d = ChordDiagram::from_word(word).expect("restriction preserves validity");
        (d, origin)
    }

    /// Every canonical diagram with `n` chords, i.e. one representative per
    /// perfect matching of `2n` points on a based circle; there are `(2n-1)!!`.
    pub fn all_canonical(n: usize) -> Vec<ChordDiagram> {
        fn fill(word: &mut Vec<Label>, next: Label, n: usize, out: &mut Vec<ChordDiagram>) {
            let Some(first) = word.iter().position(|&l| l == 0) else {
                out.push(ChordDiagram::from_word(word.clone()).expect("complete matching"));
                return;
            };
            word[first] = next;
            for partner in first + 1..2 * n {
                if word[partner] == 0 {
                    word[partner] = next;
                    fill(word, next + 1, n, out);
                    word[partner] = 0;
                }
            }
            word[first] = 0;
        }
        let mut out = Vec::new();
        fill(&mut vec![0; 2 * n], 1, n, &mut out);
        out
    }
}

fn parse_token(token: &str) -> Result<(u64, Annotation)> {
    let digits = token.bytes().take_while(u8::is_ascii_digit).count();
    if digits == 0 {
        return Err(Error::MalformedCode(format!(
            "token {token:?} does not start with a positive integer label"
        )));
    }
    let label: u64 = token[..digits]
        .parse()
        .map_err(|_| Error::MalformedCode(format!("label {token:?} is too large")))?;
    if label == 0 {
        return Err(Error::MalformedCode("label 0 is not allowed".into()));
    }
    let mut annotation = Annotation::default();
    for c in token[digits..].chars() {
        match c {
            '+' | '-' if annotation.sign.is_none() => {
                annotation.sign = Some(if c == '+' {
                    Sign::Positive
                } else {
                    Sign::Negative
                });
            }
            'o' | 'u' if annotation.passage.is_none() => {
                annotation.passage = Some(if c == 'o' {
                    Passage::Over
                } else {
                    Passage::Under
                });
            }
            _ => {
                return Err(Error::MalformedCode(format!(
                    "bad annotation suffix in token {token:?}"
                )))
            }
        }
    }
    Ok((label, annotation))
}

impl fmt::Display for ChordDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            if let Some(a) = &self.annotations {
                write!(f, "{}", a[i])?;
            }
        }
        Ok(())
    }
}

impl FromStr for ChordDiagram {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Result of [`ChordDiagram::mirror`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mirror {
    /// The canonically labelled mirror image.
    pub diagram: ChordDiagram,
    /// `tau[i - 1]` is the label in the mirror of the chord labelled `i`.
    pub tau: Vec<Label>,
}

/// How a single chord is smoothed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Smoothing {
    Oriented,
    Unoriented,
    Erased,
}

impl Smoothing {
    pub fn symbol(self) -> char {
        match self {
            Smoothing::Oriented => 'o',
            Smoothing::Unoriented => 'u',
            Smoothing::Erased => 'x',
        }
    }
}

/// A partition of the chords into oriented, unoriented and erased sets.
///
/// Stored as one [`Smoothing`] per chord so the three sets are disjoint and
/// exhaustive by construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialState {
    choices: Vec<Smoothing>,
}

impl PartialState {
    pub fn new(choices: Vec<Smoothing>) -> Self {
        PartialState { choices }
    }

    /// The all-oriented state on `n` chords.
    pub fn all_oriented(n: usize) -> Self {
        PartialState {
            choices: vec![Smoothing::Oriented; n],
        }
    }

    /// Builds a state from explicit label sets, checking that they partition
    /// `1..=n`.
    pub fn from_sets(
        n: usize,
        oriented: &[Label],
        unoriented: &[Label],
        erased: &[Label],
    ) -> Result<Self> {
        let mut choices: Vec<Option<Smoothing>> = vec![None; n];
        for (set, kind) in [
            (oriented, Smoothing::Oriented),
            (unoriented, Smoothing::Unoriented),
            (erased, Smoothing::Erased),
        ] {
            for &l in set {
                if l == 0 || l > n {
                    return Err(Error::OutOfRange { index: l, bound: n });
                }
                if choices[l - 1].replace(kind).is_some() {
                    return Err(Error::MalformedState(format!(
                        "chord {l} is assigned twice"
                    )));
                }
            }
        }
        let choices = choices
            .into_iter()
            .enumerate()
            .map(|(i, c)| {
                c.ok_or_else(|| Error::MalformedState(format!("chord {} is unassigned", i + 1)))
            })
            .collect::<Result<_>>()?;
        Ok(PartialState { choices })
    }

    /// Parses a state string over `{o, u, x}`; position `k` is chord `k + 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let choices = text
            .trim()
            .chars()
            .map(|c| match c {
                'o' => Ok(Smoothing::Oriented),
                'u' => Ok(Smoothing::Unoriented),
                'x' => Ok(Smoothing::Erased),
                other => Err(Error::MalformedState(format!(
                    "unexpected character {other:?}; expected o, u or x"
                ))),
            })
            .collect::<Result<_>>()?;
        Ok(PartialState { choices })
    }

    pub fn len(&self) -> usize {
        self.choices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.choices.is_empty()
    }

    pub fn get(&self, label: Label) -> Smoothing {
        self.choices[label - 1]
    }

    pub fn choices(&self) -> &[Smoothing] {
        &self.choices
    }

    fn labels_with(&self, kind: Smoothing) -> Vec<Label> {
        (1..=self.len()).filter(|&l| self.get(l) == kind).collect()
    }

    /// `S_o`
    pub fn oriented(&self) -> Vec<Label> {
        self.labels_with(Smoothing::Oriented)
    }

    /// `S_u`
    pub fn unoriented(&self) -> Vec<Label> {
        self.labels_with(Smoothing::Unoriented)
    }

    /// `S_∅`
    pub fn erased(&self) -> Vec<Label> {
        self.labels_with(Smoothing::Erased)
    }

    pub fn has_unoriented(&self) -> bool {
        self.choices.contains(&Smoothing::Unoriented)
    }

    pub fn has_erased(&self) -> bool {
        self.choices.contains(&Smoothing::Erased)
    }

    /// Errors unless the state has one entry per chord of `d`.
    pub fn check_against(&self, d: &ChordDiagram) -> Result<()> {
        if self.len() != d.len() {
            return Err(Error::PartitionMismatch {
                state: self.len(),
                diagram: d.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for PartialState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.choices
            .iter()
            .try_for_each(|c| write!(f, "{}", c.symbol()))
    }
}

impl FromStr for PartialState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// Gauss code of the standard diagram of the pretzel knot `L(p, q, r)`.
///
/// The diagram has three vertical two-strand twist regions with `|p|`,
/// `|q|` and `|r|` crossings. The top-right endpoint of each region is
/// joined to the top-left endpoint of the next one (cyclically, the last
/// closing around the outside to the first), and likewise along the
/// bottom. The code is recorded by walking the knot from the top-left
/// endpoint of the first region. Twist handedness only changes crossing
/// signs, so it does not affect the chord diagram.
pub fn pretzel_code(p: i64, q: i64, r: i64) -> Result<ChordDiagram> {
    if p == 0 || q == 0 || r == 0 {
        return Err(Error::ZeroParameter);
    }
    let evens = [p, q, r].iter().filter(|x| *x % 2 == 0).count();
    if evens > 1 {
        return Err(Error::InvalidPretzel(p, q, r));
    }
    let sizes = [
        p.unsigned_abs() as usize,
        q.unsigned_abs() as usize,
        r.unsigned_abs() as usize,
    ];
    let offsets = [0, sizes[0], sizes[0] + sizes[1]];

    #[derive(Clone, Copy, PartialEq, Eq)]
    enum End {
        Top,
        Bottom,
    }
    // (region, end entered through, entering on the right-hand side)
    let start = (0usize, End::Top, false);
    let mut at = start;
    let mut visits: Vec<u64> = Vec::with_capacity(2 * (sizes[0] + sizes[1] + sizes[2]));
    loop {
        let (region, end, right) = at;
        let k = sizes[region];
        let ids = (0..k).map(|i| (offsets[region] + i + 1) as u64);
        match end {
            End::Top => visits.extend(ids),
            End::Bottom => visits.extend(ids.rev()),
        }
        let exit_right = if k.is_multiple_of(2) { right } else { !right };
        let exit_end = match end {
            End::Top => End::Bottom,
            End::Bottom => End::Top,
        };
        at = if exit_right {
            ((region + 1) % 3, exit_end, false)
        } else {
            ((region + 2) % 3, exit_end, true)
        };
        if at == start {
            break;
        }
    }
    debug_assert_eq!(visits.len(), 2 * (sizes[0] + sizes[1] + sizes[2]));
    ChordDiagram::from_labels(&visits)
}

/// Which sheet of the double cover is used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    /// Contract the band joining `b_j` to the reflected `a_j`.
    First,
    /// Contract the band joining `a_j` to the reflected `b_j`.
    Second,
}

impl FromStr for Flavor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "first" | "f" => Ok(Flavor::First),
            "second" | "s" => Ok(Flavor::Second),
            other => Err(Error::MalformedState(format!(
                "unknown flavor {other:?}; expected first or second"
            ))),
        }
    }
}

/// Origin of a chord in a double-cover diagram: it joins `a_i` to `b_i`,
/// each endpoint taken either on the original copy or on the reflected one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoverChord {
    pub original: Label,
    pub first_reflected: bool,
    pub second_reflected: bool,
}

/// A double-cover diagram together with its all-oriented state and the
/// origin of each of its chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCover {
    pub diagram: ChordDiagram,
    pub state: PartialState,
    /// `origins[k - 1]` describes chord `k` of `diagram`.
    pub origins: Vec<CoverChord>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Letter {
    chord: Label,
    second: bool,
    reflected: bool,
}

/// Builds the double-cover diagram `D_j(S)` of the requested flavor.
///
/// Writing the diagram with erased chords removed as `W1 a_j W2 b_j W3`,
/// the cover is read off the word
/// `W1 rev(W2) ā_j rev(W1) rev(W3) W2 b_j W3` (first) or
/// `W1 a_j W2 rev(W1) rev(W3) b̄_j rev(W2) W3` (second), where `rev`
/// reverses a word and reflects its letters. Oriented chords give the chords
/// `a_i b_i` and `ā_i b̄_i`, unoriented ones `ā_i b_i` and `a_i b̄_i`, and
/// `j` itself gives the single chord present in the word. The result has
/// `2k - 1` chords for `k` smoothed chords and is canonically labelled.
pub fn double_cover(
    d: &ChordDiagram,
    s: &PartialState,
    j: Label,
    flavor: Flavor,
) -> Result<DoubleCover> {
    s.check_against(d)?;
    if j == 0 || j > d.len() {
        return Err(Error::OutOfRange {
            index: j,
            bound: d.len(),
        });
    }
    if s.get(j) != Smoothing::Unoriented {
        return Err(Error::NotUnoriented(j));
    }

    let letters: Vec<Letter> = d
        .word()
        .iter()
        .enumerate()
        .filter(|(_, &l)| s.get(l) != Smoothing::Erased)
        .map(|(pos, &l)| Letter {
            chord: l,
            second: d.endpoints(l)[1] == pos,
            reflected: false,
        })
        .collect();
    let aj = letters
        .iter()
        .position(|x| x.chord == j && !x.second)
        .expect("a_j present");
    let bj = letters
        .iter()
        .position(|x| x.chord == j && x.second)
        .expect("b_j present");
    let w1 = &letters[..aj];
    let w2 = &letters[aj + 1..bj];
    let w3 = &letters[bj + 1..];
    let rev = |w: &[Letter]| -> Vec<Letter> {
        w.iter()
            .rev()
            .map(|x| Letter {
                reflected: !x.reflected,
                ..*x
            })
            .collect()
    };
    let a = |reflected| Letter {
        chord: j,
        second: false,
        reflected,
    };
    let b = |reflected| Letter {
        chord: j,
        second: true,
        reflected,
    };

    let mut cover: Vec<Letter> = Vec::with_capacity(2 * letters.len() - 2);
    match flavor {
        Flavor::First => {
            cover.extend_from_slice(w1);
            cover.extend(rev(w2));
            cover.push(a(true));
            cover.extend(rev(w1));
            cover.extend(rev(w3));
            cover.extend_from_slice(w2);
            cover.push(b(false));
            cover.extend_from_slice(w3);
        }
        Flavor::Second => {
            cover.extend_from_slice(w1);
            cover.push(a(false));
            cover.extend_from_slice(w2);
            cover.extend(rev(w1));
            cover.extend(rev(w3));
            cover.push(b(true));
            cover.extend(rev(w2));
            cover.extend_from_slice(w3);
        }
    }

    let partner = |x: Letter| -> Letter {
        let flip = x.chord != j && s.get(x.chord) == Smoothing::Unoriented;
        Letter {
            chord: x.chord,
            second: !x.second,
            reflected: if x.chord == j || flip {
                !x.reflected
            } else {
                x.reflected
            },
        }
    };
    let slot = |x: Letter| 4 * (x.chord - 1) + 2 * usize::from(x.second) + usize::from(x.reflected);
    let mut position = vec![usize::MAX; 4 * d.len()];
    for (i, &x) in cover.iter().enumerate() {
        position[slot(x)] = i;
    }
    let mut word = vec![0; cover.len()];
    let mut origins = Vec::with_capacity(cover.len() / 2);
    for (pos, &x) in cover.iter().enumerate() {
        if word[pos] != 0 {
            continue;
        }
        let y = partner(x);
        let other = position[slot(y)];
        debug_assert!(
            other != usize::MAX,
            "every cover letter has its partner in the word"
        );
        origins.push(if x.second {
            CoverChord {
                original: x.chord,
                first_reflected: y.reflected,
                second_reflected: x.reflected,
            }
        } else {
            CoverChord {
                original: x.chord,
                first_reflected: x.reflected,
                second_reflected: y.reflected,
            }
        });
        word[pos] = origins.len();
        word[other] = origins.len();
    }
    let diagram = ChordDiagram::from_word(word)?;
    let state = PartialState::all_oriented(diagram.len());
    Ok(DoubleCover {
        diagram,
        state,
        origins,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> ChordDiagram {
        ChordDiagram::parse(s).unwrap()
    }

    #[test]
    fn parse_examples() {
        let d = code("1 1");
        assert_eq!(d.len(), 1);
        assert_eq!(d.word(), &[1, 1]);

        let trefoil = code("1 2 3 1 2 3");
        assert_eq!(trefoil.len(), 3);
        for i in 1..=3 {
            for j in i + 1..=3 {
                assert!(trefoil.interlaced(i, j));
            }
        }

        assert!(matches!(
            ChordDiagram::parse("1 2 1"),
            Err(Error::MalformedCode(_))
        ));
        assert!(code("").is_empty());
    }

    #[test]
    fn parse_renames_in_first_occurrence_order() {
        let d = code("7 30 7 30");
        assert_eq!(d.word(), &[1, 2, 1, 2]);
        assert_eq!(code("2 1 2 1").word(), &[1, 2, 1, 2]);
    }

    #[test]
    fn parse_rejects_bad_labels() {
        for bad in ["0 0", "-1 -1", "1 1 1", "a a", "1x 1", "1++ 1", "1 2 2"] {
            assert!(
                matches!(ChordDiagram::parse(bad), Err(Error::MalformedCode(_))),
                "{bad}"
            );
        }
    }

    #[test]
    fn annotations_are_carried() {
        let d = code("1+o 2-u 1+u 2-o");
        assert_eq!(d.word(), &[1, 2, 1, 2]);
        let a = d.annotations().unwrap();
        assert_eq!(a[0].sign, Some(Sign::Positive));
        assert_eq!(a[1].passage, Some(Passage::Under));
        assert_eq!(d.to_string(), "1+o 2-u 1+u 2-o");
        assert_eq!(code("1 2 1 2").annotations(), None);
    }

    /// Literal deletion procedure: label the chord of the first endpoint,
    /// delete it, repeat.
    fn canonical_by_deletion(d: &ChordDiagram) -> Vec<Label> {
        let mut remaining: Vec<(usize, Label)> = d.word().iter().copied().enumerate().collect();
        let mut map = vec![0; d.len()];
        let mut next = 1;
        while let Some(&(_, chord)) = remaining.first() {
            map[chord - 1] = next;
            next += 1;
            remaining.retain(|&(_, l)| l != chord);
        }
        d.word().iter().map(|&l| map[l - 1]).collect()
    }

    #[test]
    fn canonical_relabel_examples() {
        let d = ChordDiagram::from_word(vec![1, 1]).unwrap();
        assert_eq!(d.canonical_relabel().word(), &[1, 1]);
        let d = ChordDiagram::from_word(vec![2, 1, 2, 1]).unwrap();
        assert_eq!(d.canonical_relabel().word(), &[1, 2, 1, 2]);
        let d = ChordDiagram::from_word(vec![1, 2, 3, 1, 4, 3, 2, 4]).unwrap();
        assert_eq!(d.canonical_relabel(), d);
        assert!(d.is_canonical());
    }

    #[test]
    fn canonical_relabel_matches_deletion_procedure() {
        let words = [
            vec![3, 1, 2, 3, 2, 1],
            vec![4, 4, 2, 1, 3, 2, 1, 3],
            vec![2, 3, 1, 1, 3, 2],
        ];
        for w in words {
            let d = ChordDiagram::from_word(w).unwrap();
            let c = d.canonical_relabel();
            assert_eq!(c.word(), canonical_by_deletion(&d).as_slice());
            assert_eq!(c.canonical_relabel(), c);
        }
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(code("1 1").mirror().diagram, code("1 1"));
        assert_eq!(code("1 2 1 2").mirror().diagram, code("1 2 1 2"));
        let m = code("1 2 3 1 2 3").mirror();
        assert_eq!(m.diagram, code("1 2 3 1 2 3"));
        assert_eq!(m.tau, vec![3, 2, 1]);
    }

    #[test]
    fn mirror_is_an_involution_on_small_diagrams() {
        for n in 0..=5 {
            for d in ChordDiagram::all_canonical(n) {
                assert_eq!(d.mirror().diagram.mirror().diagram, d);
            }
        }
    }

    #[test]
    fn all_canonical_counts_are_double_factorials() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| ChordDiagram::all_canonical(n).len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945, 10395]);
        assert!(ChordDiagram::all_canonical(4)
            .iter()
            .all(|d| d.is_canonical()));
    }

    #[test]
    fn state_parsing() {
        let s = PartialState::parse("oux").unwrap();
        assert_eq!(s.oriented(), vec![1]);
        assert_eq!(s.unoriented(), vec![2]);
        assert_eq!(s.erased(), vec![3]);
        assert_eq!(s.to_string(), "oux");
        assert!(PartialState::parse("oz").is_err());
        let t = PartialState::from_sets(3, &[1], &[2], &[3]).unwrap();
        assert_eq!(s, t);
        assert!(PartialState::from_sets(3, &[1, 2], &[2], &[3]).is_err());
        assert!(PartialState::from_sets(3, &[1], &[2], &[]).is_err());
    }

    #[test]
    fn pretzel_trefoil() {
        let d = pretzel_code(1, 1, 1).unwrap();
        assert_eq!(d, code("1 2 3 1 2 3"));
    }

    #[test]
    fn pretzel_errors() {
        assert_eq!(pretzel_code(2, 2, 1), Err(Error::InvalidPretzel(2, 2, 1)));
        assert_eq!(pretzel_code(0, 1, 1), Err(Error::ZeroParameter));
        assert!(pretzel_code(1, 1, 2).is_ok());
        assert_eq!(
            pretzel_code(-3, 1, 5).unwrap(),
            pretzel_code(3, 1, 5).unwrap()
        );
    }

    #[test]
    fn single_chord_cover() {
        let d = code("1 1");
        let s = PartialState::parse("u").unwrap();
        for flavor in [Flavor::First, Flavor::Second] {
            let c = double_cover(&d, &s, 1, flavor).unwrap();
            assert_eq!(c.diagram, code("1 1"));
            assert_eq!(c.state, PartialState::parse("o").unwrap());
        }
    }

    #[test]
    fn crossed_pair_cover_word() {
        // W1 = (), W2 = (a2), W3 = (b2); first flavor reads ā2 ā1 b̄2 a2 b1 b2.
        let d = code("1 2 1 2");
        let s = PartialState::parse("uu").unwrap();
        let c = double_cover(&d, &s, 1, Flavor::First).unwrap();
        assert_eq!(c.diagram, code("1 2 3 3 2 1"));
        assert_eq!(
            c.origins[1],
            CoverChord {
                original: 1,
                first_reflected: true,
                second_reflected: false
            }
        );
        assert_eq!(c.diagram.len(), 3);
    }

    #[test]
    fn cover_chord_count_and_errors() {
        let d = code("1 2 3 1 4 3 2 4");
        let s = PartialState::parse("ouxu").unwrap();
        let c = double_cover(&d, &s, 2, Flavor::Second).unwrap();
        assert_eq!(c.diagram.len(), 2 * 3 - 1);
        assert!(c.diagram.is_canonical());
        assert_eq!(
            double_cover(&d, &s, 1, Flavor::First),
            Err(Error::NotUnoriented(1))
        );
        let short = PartialState::parse("ou").unwrap();
        assert!(matches!(
            double_cover(&d, &short, 2, Flavor::First),
            Err(Error::PartitionMismatch { .. })
        ));
    }
}
