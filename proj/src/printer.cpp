#include <sstream>

#include "acfq/errors.hpp"
#include "acfq/formula.hpp"

namespace acfq {

namespace {

// Precedence levels, loosest first: Or < And < unary.
enum Level { LvlOr = 0, LvlAnd = 1, LvlUnary = 2 };

void print_rec(std::ostringstream& os, const FormulaPtr& f, Level ctx) {
    switch (f->kind()) {
        case FKind::True:
            os << "true";
            return;
        case FKind::False:
            os << "false";
            return;
        case FKind::Atom:
            os << f->poly().to_string() << (f->rel() == Rel::Eq ? " = 0" : " != 0");
            return;
        case FKind::Not: {
            const FormulaPtr& c = f->child();
            os << "!";
            if (c->kind() == FKind::True || c->kind() == FKind::False) {
                print_rec(os, c, LvlUnary);
            } else {
                os << "(";
                print_rec(os, c, LvlOr);
                os << ")";
            }
            return;
        }
        case FKind::And: {
            bool parens = ctx > LvlAnd;
            if (parens) os << "(";
            // The grammar is left-associative; parenthesizing the right
            // operand keeps the printed tree shape through a reparse.
            print_rec(os, f->left(), LvlAnd);
            os << " & ";
            print_rec(os, f->right(), LvlUnary);
            if (parens) os << ")";
            return;
        }
        case FKind::Or: {
            bool parens = ctx > LvlOr;
            if (parens) os << "(";
            print_rec(os, f->left(), LvlOr);
            os << " | ";
            print_rec(os, f->right(), LvlAnd);
            if (parens) os << ")";
            return;
        }
        case FKind::Exists:
        case FKind::Forall:
        case FKind::InfMany: {
            os << (f->kind() == FKind::Exists ? "E " : f->kind() == FKind::Forall ? "A " : "Einf ");
            os << f->var() << ". ";
            const FormulaPtr& body = f->child();
            if (body->kind() == FKind::Atom || body->kind() == FKind::True ||
                body->kind() == FKind::False) {
                print_rec(os, body, LvlUnary);
            } else {
                os << "(";
                print_rec(os, body, LvlOr);
                os << ")";
            }
            return;
        }
    }
    throw PreconditionError("unknown formula kind");
}

}  // namespace

std::string print_formula(const FormulaPtr& f) {
    std::ostringstream os;
    print_rec(os, f, LvlOr);
    return os.str();
}

}  // namespace acfq
