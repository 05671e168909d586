//! The map from LFI formulas to incompatibility formulas that reads `∘α` as
//! `α ↑ ¬α`, its image test and its inverse on the image.

use crate::error::{Error, Result};
use crate::formula::{render, Conn, Formula, Signature};

/// Outcome of translating one formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TranslationReport {
    pub input: Formula,
    pub output: Formula,
    pub image_member: bool,
}

pub fn translate_lfi(f: &Formula) -> Result<Formula> {
    Signature::lfi().admits(f)?;
    Ok(tr(f))
}

fn tr(f: &Formula) -> Formula {
    match f {
        Formula::Var(_) => f.clone(),
        Formula::App(Conn::Circ, a) => {
            let t = tr(&a[0]);
            Formula::up(t.clone(), Formula::neg(t))
        }
        Formula::App(c, args) => Formula::App(*c, args.iter().map(tr).collect()),
    }
}

pub fn report(f: &Formula) -> Result<TranslationReport> {
    let output = translate_lfi(f)?;
    let image_member = is_translation_image(&output);
    Ok(TranslationReport {
        input: f.clone(),
        output,
        image_member,
    })
}

/// True iff every `↑`-subformula has the shape `β ↑ ¬β`.
pub fn is_translation_image(g: &Formula) -> bool {
    match g {
        Formula::Var(_) => true,
        Formula::App(Conn::Up, a) => {
            a[1].unary(Conn::Neg) == Some(&a[0]) && is_translation_image(&a[0])
        }
        Formula::App(Conn::Circ, _) => false,
        Formula::App(_, args) => args.iter().all(is_translation_image),
    }
}

/// Left inverse of [`translate_lfi`], defined on the image only.
pub fn untranslate(g: &Formula) -> Result<Formula> {
    Signature::nbi().admits(g)?;
    if !is_translation_image(g) {
        return Err(Error::NotInImage(render(g)));
    }
    Ok(untr(g))
}

fn untr(g: &Formula) -> Formula {
    match g {
        Formula::Var(_) => g.clone(),
        Formula::App(Conn::Up, a) => Formula::circ(untr(&a[0])),
        Formula::App(c, args) => Formula::App(*c, args.iter().map(untr).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse;

    fn l(s: &str) -> Formula {
        parse(s, &Signature::lfi()).unwrap()
    }
    fn n(s: &str) -> Formula {
        parse(s, &Signature::nbi()).unwrap()
    }

    #[test]
    fn clauses() {
        assert_eq!(translate_lfi(&l("*p")).unwrap(), n("p ^ !p"));
        assert_eq!(translate_lfi(&l("p")).unwrap(), n("p"));
        assert_eq!(translate_lfi(&l("!*p")).unwrap(), n("!(p ^ !p)"));
        assert_eq!(translate_lfi(&l("**p")).unwrap(), n("(p ^ !p) ^ !(p ^ !p)"));
    }

    #[test]
    fn image() {
        assert!(!is_translation_image(&n("p ^ q")));
        assert!(is_translation_image(&n("p ^ !p")));
        assert!(!is_translation_image(&n("(p ^ !p) & (q ^ r)")));
        assert!(!is_translation_image(&n("p ^ p")));
        assert_eq!(untranslate(&n("p ^ !p")).unwrap(), l("*p"));
        assert!(matches!(
            untranslate(&n("p ^ q")),
            Err(Error::NotInImage(_))
        ));
        let r = report(&l("*p -> p")).unwrap();
        assert!(r.image_member);
    }
}
