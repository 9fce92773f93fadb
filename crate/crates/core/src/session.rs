//! One incremental pipeline: the escalier game, separators and, optionally,
//! the multiplication matrices, advanced together point by point.

use alloc::vec::Vec;

use crate::error::Result;
use crate::lexgame::LexGame;
use crate::monomial::Term;
use crate::mulmat::MulState;
use crate::scalar::FieldSpec;
use crate::separators::SeparatorFamily;
use crate::trie::Point;

#[derive(Debug, Clone)]
pub struct Session {
    game: LexGame,
    separators: SeparatorFamily,
    matrices: Option<MulState>,
}

impl Session {
    /// `with_matrices` enables the cubic-cost matrix layer.
    pub fn new(n: usize, field: FieldSpec, with_matrices: bool) -> Self {
        Session {
            game: LexGame::new(n, field),
            separators: SeparatorFamily::new(n, field),
            matrices: with_matrices.then(|| MulState::new(n, field)),
        }
    }

    /// Continues from a game rebuilt from saved state.
    pub fn from_game(game: LexGame, with_matrices: bool) -> Result<Self> {
        let n = game.nvars();
        let field = game.field();
        let separators = SeparatorFamily::from_trie(game.trie(), field)?;
        let matrices = if with_matrices {
            let mut m = MulState::new(n, field);
            let table = game.table();
            for (i, p) in game.points().iter().enumerate() {
                m.add_point(p.clone(), table.term(i).clone(), table.factor(i))?;
            }
            Some(m)
        } else {
            None
        };
        Ok(Session {
            game,
            separators,
            matrices,
        })
    }

    pub fn run(n: usize, field: FieldSpec, points: &[Point], with_matrices: bool) -> Result<Self> {
        let mut s = Session::new(n, field, with_matrices);
        for p in points {
            s.add_point(p.clone())?;
        }
        Ok(s)
    }

    /// Adds a point to every layer. If any layer fails, all of them are left
    /// as they were.
    pub fn add_point(&mut self, p: Point) -> Result<Term> {
        let snapshot = self.clone();
        let result = self.try_add(p);
        if result.is_err() {
            *self = snapshot;
        }
        result
    }

    fn try_add(&mut self, p: Point) -> Result<Term> {
        let term = self.game.add_point(p.clone())?;
        self.separators.add_point(self.game.trie())?;
        if let Some(m) = self.matrices.as_mut() {
            let i = self.game.len() - 1;
            m.add_point(p, term.clone(), self.game.table().factor(i))?;
        }
        Ok(term)
    }

    pub fn game(&self) -> &LexGame {
        &self.game
    }

    pub fn separators(&self) -> &SeparatorFamily {
        &self.separators
    }

    pub fn matrices(&self) -> Option<&MulState> {
        self.matrices.as_ref()
    }

    pub fn points(&self) -> &[Point] {
        self.game.points()
    }

    pub fn terms(&self) -> Vec<Term> {
        self.game.table().terms().to_vec()
    }
}
