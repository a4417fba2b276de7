#pragma once
//
// Group presentations and free-group words.
//
// Word syntax: one lowercase letter per generator, the matching uppercase
// letter is its inverse, no whitespace. "aBab" = a b^-1 a b.
//

#include <cctype>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace charvar {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator index together with an exponent of +1 or -1.
struct Letter {
  int gen = 0;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline bool cancels(const Letter& x, const Letter& y) {
  return x.gen == y.gen && x.sign == -y.sign;
}

/// Removes adjacent cancelling pairs until none remain (stack reduction).
inline Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && cancels(out.back(), l))
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

inline bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (cancels(w[i - 1], w[i])) return false;
  return true;
}

inline Word invert_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& l : out) l.sign = -l.sign;
  return out;
}

/// Freely reduced product u·v.
inline Word concat(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  return free_reduce(out);
}

/// Freely reduced commutator [u,v] = u v u^-1 v^-1.
inline Word commutator(const Word& u, const Word& v) {
  return concat(concat(u, v), concat(invert_word(u), invert_word(v)));
}

namespace detail {

inline int find_generator(char lower, std::span<const std::string> names) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i].size() == 1 && names[i][0] == lower) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

/// Parses a word over single-letter generator names. The result is freely reduced.
inline Word parse_word(std::string_view text, std::span<const std::string> names) {
  if (text.empty()) throw Error("parse_word: empty input");
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    const auto uc = static_cast<unsigned char>(c);
    if (!std::isalpha(uc))
      throw Error("parse_word: unexpected character '" + std::string(1, c) + "' in \"" +
                  std::string(text) + "\"");
    const char lower = static_cast<char>(std::tolower(uc));
    const int idx = detail::find_generator(lower, names);
    if (idx < 0)
      throw Error("parse_word: unknown generator letter '" + std::string(1, c) + "' in \"" +
                  std::string(text) + "\"");
    w.push_back({idx, std::isupper(uc) ? -1 : 1});
  }
  return free_reduce(w);
}

/// Inverse of parse_word on freely reduced words. The empty word renders as "".
inline std::string render_word(const Word& w, std::span<const std::string> names) {
  std::string out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (l.gen < 0 || static_cast<std::size_t>(l.gen) >= names.size())
      throw Error("render_word: generator index out of range");
    const char c = names[l.gen][0];
    out.push_back(l.sign > 0 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  return out;
}

enum class PeripheralKind { torus, higher_genus };

/// Peripheral subgroup marking. A torus carries exactly two words (meridian, longitude).
struct PeripheralSpec {
  PeripheralKind kind = PeripheralKind::torus;
  std::vector<Word> words;
};

/// Finite presentation <g_1..g_m1 | r_1..r_m2> with peripheral markings.
class GroupPresentation {
 public:
  GroupPresentation(std::vector<std::string> generator_names, std::vector<Word> relators,
                    std::vector<PeripheralSpec> peripheral = {})
      : names_(std::move(generator_names)),
        relators_(std::move(relators)),
        peripheral_(std::move(peripheral)) {
    if (names_.empty()) throw Error("presentation: at least one generator is required");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      const std::string& s = names_[i];
      if (s.size() != 1 || !std::islower(static_cast<unsigned char>(s[0])))
        throw Error("presentation: generator names must be single lowercase letters, got \"" + s +
                    "\"");
      for (std::size_t j = 0; j < i; ++j)
        if (names_[j] == s) throw Error("presentation: duplicate generator \"" + s + "\"");
    }
    for (const Word& r : relators_) {
      check_indices(r);
      if (r.empty()) throw Error("presentation: relators must be nonempty after free reduction");
      if (!is_freely_reduced(r)) throw Error("presentation: relators must be freely reduced");
    }
    for (const PeripheralSpec& ps : peripheral_) {
      if (ps.kind == PeripheralKind::torus && ps.words.size() != 2)
        throw Error("presentation: a torus peripheral marking needs exactly two words");
      for (const Word& w : ps.words) check_indices(w);
    }
  }

  /// Builds a presentation from word strings.
  static GroupPresentation from_strings(std::vector<std::string> generator_names,
                                        const std::vector<std::string>& relators) {
    std::vector<Word> rel;
    for (const std::string& s : relators) rel.push_back(parse_word(s, generator_names));
    return GroupPresentation(std::move(generator_names), std::move(rel));
  }

  const std::vector<std::string>& generator_names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::vector<PeripheralSpec>& peripheral() const { return peripheral_; }

  int num_generators() const { return static_cast<int>(names_.size()); }
  int num_relators() const { return static_cast<int>(relators_.size()); }

  int torus_count() const {
    int t = 0;
    for (const auto& ps : peripheral_) t += ps.kind == PeripheralKind::torus;
    return t;
  }

  /// Indices into peripheral() of the torus markings, in order.
  std::vector<int> torus_indices() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < peripheral_.size(); ++i)
      if (peripheral_[i].kind == PeripheralKind::torus) out.push_back(static_cast<int>(i));
    return out;
  }

  Word parse(std::string_view text) const { return parse_word(text, names_); }
  std::string render(const Word& w) const { return render_word(w, names_); }

 private:
  void check_indices(const Word& w) const {
    for (const Letter& l : w)
      if (l.gen < 0 || l.gen >= num_generators() || (l.sign != 1 && l.sign != -1))
        throw Error("presentation: word refers to an undeclared generator");
  }

  std::vector<std::string> names_;
  std::vector<Word> relators_;
  std::vector<PeripheralSpec> peripheral_;
};

/// Closed oriented genus-g surface: generators a1 b1 ... ag bg named by consecutive
/// letters starting at 'a', single relator [a1,b1]...[ag,bg].
inline GroupPresentation surface_presentation(int genus) {
  if (genus < 1) throw Error("surface_presentation: genus must be at least 1");
  if (genus > 13) throw Error("surface_presentation: genus above 13 exceeds the single-letter alphabet");
  std::vector<std::string> names;
  for (int i = 0; i < 2 * genus; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  Word rel;
  for (int i = 0; i < genus; ++i) {
    const int a = 2 * i, b = 2 * i + 1;
    rel.insert(rel.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
  }
  return GroupPresentation(std::move(names), {free_reduce(rel)});
}

/// Free group on k generators (a genus-k handlebody).
inline GroupPresentation free_group_presentation(int k) {
  if (k < 1 || k > 26) throw Error("free_group_presentation: rank must be in 1..26");
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.emplace_back(1, static_cast<char>('a' + i));
  return GroupPresentation(std::move(names), {});
}

/// 1 - m1 + m2. Only meaningful when the presentation comes from a CW complex with
/// a single 0-cell; callers with other presentations should supply chi explicitly.
inline int euler_characteristic(const GroupPresentation& p) {
  return 1 - p.num_generators() + p.num_relators();
}

}  // namespace charvar
