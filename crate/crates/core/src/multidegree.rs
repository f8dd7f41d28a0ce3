use std::fmt;

use serde::{Serialize, Serializer};

use crate::monomial::{Monomial, MAX_VARS};

/// A point of `Z^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiDegree {
    n: u8,
    c: [i32; MAX_VARS],
}

impl MultiDegree {
    pub fn zero(n: usize) -> Self {
        assert!(n <= MAX_VARS);
        MultiDegree {
            n: n as u8,
            c: [0; MAX_VARS],
        }
    }

    pub fn from_slice(v: &[i32]) -> Self {
        let mut d = Self::zero(v.len());
        d.c[..v.len()].copy_from_slice(v);
        d
    }

    pub fn unit(n: usize, v: usize) -> Self {
        let mut d = Self::zero(n);
        d.c[v] = 1;
        d
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.c[..self.n as usize]
    }

    pub fn get(&self, v: usize) -> i32 {
        self.c[v]
    }

    pub fn set(&mut self, v: usize, x: i32) {
        self.c[v] = x;
    }

    pub fn total(&self) -> i32 {
        self.coords().iter().sum()
    }

    pub fn add(&self, o: &MultiDegree) -> MultiDegree {
        let mut d = *self;
        for k in 0..self.n() {
            d.c[k] += o.c[k];
        }
        d
    }

    pub fn sub(&self, o: &MultiDegree) -> MultiDegree {
        let mut d = *self;
        for k in 0..self.n() {
            d.c[k] -= o.c[k];
        }
        d
    }

    pub fn neg(&self) -> MultiDegree {
        let mut d = *self;
        for k in 0..self.n() {
            d.c[k] = -d.c[k];
        }
        d
    }

    pub fn plus_unit(&self, v: usize) -> MultiDegree {
        let mut d = *self;
        d.c[v] += 1;
        d
    }

    pub fn minus_unit(&self, v: usize) -> MultiDegree {
        let mut d = *self;
        d.c[v] -= 1;
        d
    }

    /// Componentwise `self <= o`.
    pub fn leq(&self, o: &MultiDegree) -> bool {
        self.coords().iter().zip(o.coords()).all(|(a, b)| a <= b)
    }

    pub fn meet(&self, o: &MultiDegree) -> MultiDegree {
        let mut d = *self;
        for k in 0..self.n() {
            d.c[k] = d.c[k].min(o.c[k]);
        }
        d
    }

    pub fn join(&self, o: &MultiDegree) -> MultiDegree {
        let mut d = *self;
        for k in 0..self.n() {
            d.c[k] = d.c[k].max(o.c[k]);
        }
        d
    }

    /// The exponent vector, when all coordinates are nonnegative.
    pub fn to_monomial(&self) -> Option<Monomial> {
        let exps: Option<Vec<u32>> = self.coords().iter().map(|&x| u32::try_from(x).ok()).collect();
        Monomial::new(&exps?).ok()
    }
}

impl From<&Monomial> for MultiDegree {
    fn from(m: &Monomial) -> Self {
        let mut d = Self::zero(m.n());
        for (k, &e) in m.exponents().iter().enumerate() {
            d.c[k] = e as i32;
        }
        d
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, x) in self.coords().iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for MultiDegree {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

/// The lattice box `[lo, hi]` with a dense linear index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBox {
    lo: MultiDegree,
    hi: MultiDegree,
    strides: Vec<usize>,
    len: usize,
}

impl DegreeBox {
    /// Requires `lo <= hi`.
    pub fn new(lo: MultiDegree, hi: MultiDegree) -> Self {
        assert!(lo.leq(&hi), "empty box {lo} .. {hi}");
        let n = lo.n();
        let mut strides = vec![0; n];
        let mut len = 1usize;
        for k in 0..n {
            strides[k] = len;
            len *= (hi.get(k) - lo.get(k) + 1) as usize;
        }
        DegreeBox { lo, hi, strides, len }
    }

    pub fn lo(&self) -> MultiDegree {
        self.lo
    }

    pub fn hi(&self) -> MultiDegree {
        self.hi
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn contains(&self, d: &MultiDegree) -> bool {
        self.lo.leq(d) && d.leq(&self.hi)
    }

    pub fn index(&self, d: &MultiDegree) -> usize {
        debug_assert!(self.contains(d));
        (0..self.lo.n())
            .map(|k| (d.get(k) - self.lo.get(k)) as usize * self.strides[k])
            .sum()
    }

    pub fn point(&self, mut idx: usize) -> MultiDegree {
        let mut d = self.lo;
        for k in 0..self.lo.n() {
            let w = (self.hi.get(k) - self.lo.get(k) + 1) as usize;
            d.set(k, self.lo.get(k) + (idx % w) as i32);
            idx /= w;
        }
        d
    }

    pub fn points(&self) -> impl Iterator<Item = MultiDegree> + '_ {
        (0..self.len).map(|i| self.point(i))
    }

    /// Projects `d` (assumed `>= lo`) onto the box by clamping from above.
    pub fn clamp_above(&self, d: &MultiDegree) -> MultiDegree {
        d.meet(&self.hi)
    }
}
