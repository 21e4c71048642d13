#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "mqlogic/calculus.hpp"
#include "mqlogic/errors.hpp"
#include "mqlogic/parser.hpp"
#include "mqlogic/rewrite.hpp"

namespace mqlogic {

namespace {

// How far past a segment's start member lookups search.
constexpr std::uint64_t kMemberWindow = 64;

const std::string kIndex = "_i";

std::string item_text(const Formula& f) {
  return f.kind() == Formula::Kind::Cond ? "(" + to_string(f) + ")" : to_string(f);
}

std::string mult_suffix(const Multiplicity& m) {
  return (m.is_omega() || m.count() > 1) ? "^" + to_string(m) : "";
}

Term succ_power(Term t, std::uint64_t k) {
  for (std::uint64_t i = 0; i < k; ++i) t = Term::app("succ", {t});
  return t;
}

// The segment with its first d members dropped.
FamilySegment shifted(const FamilySegment& seg, std::uint64_t d, const Signature& sig) {
  if (!sig.numerals()) return FamilySegment{seg.pattern, seg.var, seg.start + d, seg.mult};
  Formula p = normalize_formula(substitute(seg.pattern, seg.var, succ_power(Term::var(seg.var), d)), sig);
  return FamilySegment{p, seg.var, seg.start, seg.mult};
}

void expand(SchematicSide& side, std::size_t k, std::uint64_t d, const Signature& sig) {
  const FamilySegment seg = side.segments[k];
  for (std::uint64_t i = 0; i < d; ++i) side.plain.add(segment_member(seg, seg.start + i, sig), seg.mult);
  side.segments[k] = shifted(seg, d, sig);
}

bool segment_less(const FamilySegment& a, const FamilySegment& b) {
  if (auto c = a.pattern <=> b.pattern; c != 0) return c < 0;
  if (a.start != b.start) return a.start < b.start;
  return a.mult < b.mult;
}

}  // namespace

SchematicSequent SchematicSequent::from(const Sequent& s) {
  SchematicSequent out;
  out.ant.plain = s.antecedent;
  out.suc.plain = s.succedent;
  return out;
}

Sequent SchematicSequent::to_sequent() const {
  if (has_segments()) throw std::logic_error("sequent has index families: " + to_string(*this));
  return Sequent{ant.plain, suc.plain};
}

std::string to_string(const SchematicSide& s) {
  std::vector<std::string> items;
  for (const auto& [f, m] : s.plain.entries()) items.push_back(item_text(f) + mult_suffix(m));
  for (const auto& seg : s.segments) {
    items.push_back("{" + to_string(seg.pattern) + " | " + seg.var + ">=" + std::to_string(seg.start) + "}" +
                    mult_suffix(seg.mult));
  }
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out;
}

std::string to_string(const SchematicSequent& s) {
  const std::string a = to_string(s.ant);
  const std::string b = to_string(s.suc);
  std::string out = a.empty() ? "|-" : a + " |-";
  if (!b.empty()) out += " " + b;
  return out;
}

FamilySegment parse_segment(std::string_view text, const Signature& sig) {
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') throw SyntaxError("segment must be {A | n>=k}", 0);
  body = body.substr(1, body.size() - 2);
  const auto bar = find_top_level(body, "|");
  if (bar == std::string::npos) throw SyntaxError("segment needs '|'", 0);
  const std::string range = trim(body.substr(bar + 1));
  const auto ge = range.find(">=");
  if (ge == std::string::npos) throw SyntaxError("segment range must be n>=k", bar);
  const std::string var = trim(range.substr(0, ge));
  std::uint64_t start = 0;
  try {
    start = std::stoull(trim(range.substr(ge + 2)));
  } catch (const std::exception&) {
    throw SyntaxError("bad segment start in '" + range + "'", bar);
  }
  ParseOptions opts;
  opts.allow_free_variables = true;
  FamilySegment seg{parse_formula(body.substr(0, bar), sig, opts), var, start};
  return seg;
}

SchematicSequent parse_schematic_sequent(std::string_view text, const Signature& sig) {
  const auto turnstile = find_top_level(text, "|-");
  if (turnstile == std::string_view::npos) throw SyntaxError("sequent needs '|-'", 0);
  ParseOptions opts;
  opts.allow_free_variables = true;
  auto side = [&](std::string_view part) {
    SchematicSide s;
    for (const auto& item : split_top_level(part, ',')) {
      if (item.empty()) throw SyntaxError("empty sequent item", 0);
      auto [body, m] = split_multiplicity(item);
      if (!body.empty() && body.front() == '{') {
        FamilySegment seg = parse_segment(body, sig);
        seg.mult = m;
        s.segments.push_back(std::move(seg));
      } else {
        s.plain.add(parse_formula(body, sig, opts), m);
      }
    }
    return s;
  };
  SchematicSequent out;
  out.ant = side(text.substr(0, turnstile));
  out.suc = side(text.substr(turnstile + 2));
  return out;
}

Formula segment_member(const FamilySegment& seg, std::uint64_t j, const Signature& sig) {
  return normalize_formula(substitute(seg.pattern, seg.var, instance_term(sig, j)), sig);
}

SchematicSide canonical(const SchematicSide& s, const Signature& sig) {
  SchematicSide out;
  out.plain = s.plain.normalized(sig);
  for (const auto& seg : s.segments) {
    Formula p = seg.var == kIndex ? seg.pattern : substitute(seg.pattern, seg.var, Term::var(kIndex));
    std::uint64_t start = seg.start;
    if (sig.numerals()) {
      // Re-index from 0 so that equal families get equal patterns.
      p = substitute(p, kIndex, succ_power(Term::var(kIndex), start));
      start = 0;
    }
    p = normalize_formula(p, sig);
    if (!occurs_free(kIndex, p)) {
      // Infinitely many indices, all giving the same formula.
      out.plain.add(p, Multiplicity::omega());
      continue;
    }
    out.segments.push_back(FamilySegment{p, kIndex, start, seg.mult});
  }
  std::sort(out.segments.begin(), out.segments.end(), segment_less);
  std::vector<FamilySegment> merged;
  for (auto& seg : out.segments) {
    if (!merged.empty() && merged.back().pattern == seg.pattern && merged.back().start == seg.start) {
      merged.back().mult = merged.back().mult + seg.mult;
    } else {
      merged.push_back(std::move(seg));
    }
  }
  out.segments = std::move(merged);
  return out;
}

SchematicSequent canonical(const SchematicSequent& s, const Signature& sig) {
  return SchematicSequent{canonical(s.ant, sig), canonical(s.suc, sig)};
}

SchematicSide side_union(const SchematicSide& a, const SchematicSide& b) {
  SchematicSide out;
  out.plain = multiset_union(a.plain, b.plain);
  out.segments = a.segments;
  out.segments.insert(out.segments.end(), b.segments.begin(), b.segments.end());
  return out;
}

std::optional<SchematicSide> remove_occurrence(const SchematicSide& s, const Formula& f, const Signature& sig) {
  SchematicSide c = canonical(s, sig);
  const Formula key = normalize_formula(f, sig);
  if (c.plain.multiplicity(key)) {
    c.plain.remove_one(key);
    return c;
  }
  for (std::size_t k = 0; k < c.segments.size(); ++k) {
    const FamilySegment seg = c.segments[k];
    for (std::uint64_t j = 0; j < kMemberWindow; ++j) {
      if (segment_member(seg, seg.start + j, sig) != key) continue;
      expand(c, k, j + 1, sig);
      c.plain.remove_one(key);
      return canonical(c, sig);
    }
  }
  return std::nullopt;
}

namespace {

bool has_segment(const SchematicSide& s, const FamilySegment& seg) {
  return std::any_of(s.segments.begin(), s.segments.end(),
                     [&](const FamilySegment& o) { return o.pattern == seg.pattern && o.start == seg.start; });
}

// Expands a segment of y by a few members when that lines it up with an
// unmatched segment of x.
bool align_into(const SchematicSide& x, SchematicSide& y, const Signature& sig) {
  for (const auto& target : x.segments) {
    if (has_segment(y, target)) continue;
    for (std::size_t k = 0; k < y.segments.size(); ++k) {
      const FamilySegment& seg = y.segments[k];
      if (!sig.numerals()) {
        if (seg.pattern == target.pattern && seg.start < target.start) {
          expand(y, k, target.start - seg.start, sig);
          return true;
        }
        continue;
      }
      for (std::uint64_t d = 1; d <= kMemberWindow; ++d) {
        if (shifted(seg, d, sig).pattern == target.pattern) {
          expand(y, k, d, sig);
          return true;
        }
      }
    }
  }
  return false;
}

bool same_support(const SchematicSide& x, const SchematicSide& y) {
  if (x.plain.support_size() != y.plain.support_size() || x.segments.size() != y.segments.size()) return false;
  for (const auto& [f, m] : x.plain.entries()) {
    if (!y.plain.multiplicity(f)) return false;
  }
  return std::all_of(x.segments.begin(), x.segments.end(), [&](const FamilySegment& s) { return has_segment(y, s); });
}

}  // namespace

bool sides_equivalent(const SchematicSide& a, const SchematicSide& b, const Signature& sig, bool* same_shape) {
  SchematicSide x = canonical(a, sig);
  SchematicSide y = canonical(b, sig);
  for (int guard = 0; guard < 256; ++guard) {
    if (align_into(x, y, sig)) {
      y = canonical(y, sig);
    } else if (align_into(y, x, sig)) {
      x = canonical(x, sig);
    } else {
      break;
    }
  }
  if (same_shape) *same_shape = same_support(x, y);
  return x == y;
}

Verdict compare_sequents(const SchematicSequent& expected, const SchematicSequent& found, const Signature& sig) {
  bool shape_a = false;
  bool shape_s = false;
  const bool ant = sides_equivalent(expected.ant, found.ant, sig, &shape_a);
  const bool suc = sides_equivalent(expected.suc, found.suc, sig, &shape_s);
  if (ant && suc) return Verdict::pass();
  const VerdictKind k = shape_a && shape_s ? VerdictKind::MultiplicityMismatch : VerdictKind::ShapeMismatch;
  return Verdict::fail(k, "expected " + to_string(canonical(expected, sig)) + ", found " + to_string(canonical(found, sig)));
}

Derivation Derivation::node(RuleId rule, SchematicSequent conclusion, std::vector<Derivation> premises) {
  Derivation d;
  d.rule = rule;
  d.conclusion = std::move(conclusion);
  d.premises = std::move(premises);
  return d;
}

Derivation Derivation::previous() {
  Derivation d;
  d.previous_member = true;
  return d;
}

Derivation with_family(Derivation d, UniformFamily family) {
  d.family = std::make_shared<const UniformFamily>(std::move(family));
  return d;
}

namespace {

SchematicSide instantiate_side(const SchematicSide& s, const std::string& var, const Term& term) {
  SchematicSide out;
  for (const auto& [f, m] : s.plain.entries()) out.plain.add(substitute(f, var, term), m);
  for (const auto& seg : s.segments) {
    FamilySegment copy = seg;
    if (seg.var != var) copy.pattern = substitute(seg.pattern, var, term);
    out.segments.push_back(std::move(copy));
  }
  return out;
}

}  // namespace

Derivation instantiate(const Derivation& d, const std::string& var, const Term& term) {
  Derivation out = d;
  out.conclusion.ant = instantiate_side(d.conclusion.ant, var, term);
  out.conclusion.suc = instantiate_side(d.conclusion.suc, var, term);
  if (d.principal) out.principal->formula = substitute(d.principal->formula, var, term);
  for (auto& p : out.premises) p = instantiate(p, var, term);
  if (d.family) {
    UniformFamily fam = *d.family;
    if (fam.var != var) fam.tmpl = instantiate(fam.tmpl, var, term);
    for (auto& m : fam.explicit_members) m = instantiate(m, var, term);
    out.family = std::make_shared<const UniformFamily>(std::move(fam));
  }
  return out;
}

}  // namespace mqlogic
