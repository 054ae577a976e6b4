#pragma once

// Words in free groups over named generators, finite presentations and the
// line-oriented presentation text format:
//
//   # label: trefoil
//   gens: a b
//   rel: b^-1 a^-1 b^-1 a b a
//   rel: b = c^-1 a c          # R_{1,1}
//
// An equality "lhs = rhs" is stored as the single relator lhs * rhs^-1. A
// trailing comment on a rel line names that relator.

#include <algorithm>  // for find
#include <cctype>     // for isdigit, islower
#include <compare>    // for strong_ordering
#include <cstddef>    // for size_t
#include <cstdint>    // for int64_t
#include <map>        // for map
#include <ostream>    // for ostream
#include <sstream>    // for istringstream
#include <string>     // for string
#include <string_view>
#include <utility>  // for move
#include <vector>   // for vector

#include "error.hpp"

namespace knotcover {

  // A generator name: lowercase stem plus optional positive subscript, so
  // "h3" is (h, 3) and "a" is (a, 0).
  struct GenSym {
    std::string stem;
    unsigned    subscript = 0;

    GenSym() = default;
    GenSym(std::string s, unsigned sub = 0) : stem(std::move(s)), subscript(sub) {}
    GenSym(char const* s) : GenSym(parse(s)) {}

    std::string name() const {
      return subscript == 0 ? stem : stem + std::to_string(subscript);
    }

    // Splits a trailing run of digits (without a leading zero) off as the
    // subscript. Throws ParseError unless name matches [a-z][a-z0-9]*.
    static GenSym parse(std::string_view name) {
      if (name.empty() || !std::islower(static_cast<unsigned char>(name[0]))) {
        throw ParseError("invalid generator name '" + std::string(name) + "'");
      }
      for (char c : name) {
        if (!std::islower(static_cast<unsigned char>(c))
            && !std::isdigit(static_cast<unsigned char>(c))) {
          throw ParseError("invalid generator name '" + std::string(name) + "'");
        }
      }
      std::size_t k = name.size();
      while (k > 1 && std::isdigit(static_cast<unsigned char>(name[k - 1]))) {
        --k;
      }
      if (k == name.size() || name[k] == '0' || name.size() - k > 9) {
        return GenSym(std::string(name), 0);
      }
      return GenSym(std::string(name.substr(0, k)),
                    static_cast<unsigned>(std::stoul(std::string(name.substr(k)))));
    }

    friend bool operator==(GenSym const&, GenSym const&) = default;
    friend auto operator<=>(GenSym const&, GenSym const&) = default;

    friend std::ostream& operator<<(std::ostream& os, GenSym const& g) {
      return os << g.name();
    }
  };

  struct Syllable {
    GenSym gen;
    int    exp = 1;  // +1 or -1

    Syllable inverse() const {
      return Syllable{gen, -exp};
    }

    friend bool operator==(Syllable const&, Syllable const&) = default;
  };

  // A freely reduced word. The only way to build one is through free
  // reduction, so every Word satisfies the invariant.
  class Word {
   public:
    Word() = default;

    // Freely reduces the syllable list.
    explicit Word(std::vector<Syllable> const& raw) {
      for (auto const& s : raw) {
        push_back(s);
      }
    }

    Word(std::initializer_list<Syllable> raw) : Word(std::vector<Syllable>(raw)) {}

    static Word generator(GenSym g, int exp = 1) {
      Word w;
      w.push_back(Syllable{std::move(g), exp});
      return w;
    }

    std::vector<Syllable> const& syllables() const noexcept {
      return syl_;
    }
    std::size_t size() const noexcept {
      return syl_.size();
    }
    bool empty() const noexcept {
      return syl_.empty();
    }

    // Appends one syllable, cancelling against the last one if possible.
    void push_back(Syllable const& s) {
      if (s.exp != 1 && s.exp != -1) {
        throw DomainError("syllable exponent must be +1 or -1");
      }
      if (!syl_.empty() && syl_.back().gen == s.gen && syl_.back().exp == -s.exp) {
        syl_.pop_back();
      } else {
        syl_.push_back(s);
      }
    }

    Word operator*(Word const& other) const {
      Word r = *this;
      for (auto const& s : other.syl_) {
        r.push_back(s);
      }
      return r;
    }

    Word inverse() const {
      Word r;
      r.syl_.reserve(syl_.size());
      for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
        r.syl_.push_back(it->inverse());
      }
      return r;
    }

    Word pow(unsigned n) const {
      Word r;
      for (unsigned i = 0; i < n; ++i) {
        r = r * *this;
      }
      return r;
    }

    // Space separated syllables, "a b^-1 c"; empty string for the identity.
    std::string to_string() const {
      std::string out;
      for (auto const& s : syl_) {
        if (!out.empty()) {
          out += ' ';
        }
        out += s.gen.name();
        if (s.exp == -1) {
          out += "^-1";
        }
      }
      return out;
    }

    friend bool operator==(Word const&, Word const&) = default;

    friend std::ostream& operator<<(std::ostream& os, Word const& w) {
      return os << (w.empty() ? std::string("1") : w.to_string());
    }

   private:
    std::vector<Syllable> syl_;
  };

  inline Word reduce(std::vector<Syllable> const& raw) {
    return Word(raw);
  }

  inline Word invert_word(Word const& w) {
    return w.inverse();
  }

  // by^-1 * w * by
  inline Word conjugate(Word const& w, Word const& by) {
    return by.inverse() * w * by;
  }

  inline std::int64_t exponent_sum(Word const& w, GenSym const& g) {
    std::int64_t n = 0;
    for (auto const& s : w.syllables()) {
      if (s.gen == g) {
        n += s.exp;
      }
    }
    return n;
  }

  inline std::int64_t total_exponent(Word const& w) {
    std::int64_t n = 0;
    for (auto const& s : w.syllables()) {
      n += s.exp;
    }
    return n;
  }

  // Removes matching inverse syllables from both ends. Never applied
  // implicitly.
  inline Word cyclically_reduce(Word const& w) {
    auto const& s     = w.syllables();
    std::size_t first = 0, last = s.size();
    while (last - first >= 2 && s[first].gen == s[last - 1].gen
           && s[first].exp == -s[last - 1].exp) {
      ++first;
      --last;
    }
    return Word(std::vector<Syllable>(s.begin() + first, s.begin() + last));
  }

  // Parses "a b^-1 c" (whitespace separated syllables).
  inline Word parse_word(std::string_view text) {
    std::istringstream    in{std::string(text)};
    std::string           tok;
    std::vector<Syllable> raw;
    while (in >> tok) {
      int exp = 1;
      if (auto k = tok.find('^'); k != std::string::npos) {
        if (tok.substr(k) != "^-1") {
          throw ParseError("bad exponent in syllable '" + tok + "'");
        }
        exp = -1;
        tok = tok.substr(0, k);
      }
      raw.push_back(Syllable{GenSym::parse(tok), exp});
    }
    return Word(raw);
  }

  // A finite presentation. Relator names are metadata and do not take part in
  // equality.
  class Presentation {
   public:
    Presentation() = default;

    Presentation(std::string label, std::vector<GenSym> gens)
        : label_(std::move(label)), gens_(std::move(gens)) {
      for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!index_.emplace(gens_[i], i).second) {
          throw DomainError("duplicate generator '" + gens_[i].name() + "'");
        }
      }
    }

    std::string const& label() const noexcept {
      return label_;
    }
    void set_label(std::string label) {
      label_ = std::move(label);
    }

    std::vector<GenSym> const& generators() const noexcept {
      return gens_;
    }
    std::vector<Word> const& relators() const noexcept {
      return rels_;
    }
    std::vector<std::string> const& relator_names() const noexcept {
      return names_;
    }

    // The given name, or "r<k>" (1-based) for unnamed relators.
    std::string relator_name(std::size_t i) const {
      return names_.at(i).empty() ? "r" + std::to_string(i + 1) : names_[i];
    }

    bool has_generator(GenSym const& g) const {
      return index_.count(g) != 0;
    }

    std::size_t generator_index(GenSym const& g) const {
      auto it = index_.find(g);
      if (it == index_.end()) {
        throw DomainError("unknown generator '" + g.name() + "'");
      }
      return it->second;
    }

    void add_relator(Word w, std::string name = {}) {
      for (auto const& s : w.syllables()) {
        if (!has_generator(s.gen)) {
          throw DomainError("relator uses undeclared generator '" + s.gen.name()
                            + "'");
        }
      }
      rels_.push_back(std::move(w));
      names_.push_back(std::move(name));
    }

    // Adds lhs * rhs^-1.
    void add_equality(Word const& lhs, Word const& rhs, std::string name = {}) {
      add_relator(lhs * rhs.inverse(), std::move(name));
    }

    // Relators as integer letters: generator i is 2i, its inverse 2i + 1.
    std::vector<std::vector<std::size_t>> encoded_relators() const {
      std::vector<std::vector<std::size_t>> out;
      out.reserve(rels_.size());
      for (auto const& r : rels_) {
        out.push_back(encode(r));
      }
      return out;
    }

    std::vector<std::size_t> encode(Word const& w) const {
      std::vector<std::size_t> e;
      e.reserve(w.size());
      for (auto const& s : w.syllables()) {
        e.push_back(2 * generator_index(s.gen) + (s.exp < 0 ? 1 : 0));
      }
      return e;
    }

    friend bool operator==(Presentation const& x, Presentation const& y) {
      return x.gens_ == y.gens_ && x.rels_ == y.rels_;
    }

   private:
    std::string                   label_;
    std::vector<GenSym>           gens_;
    std::vector<Word>             rels_;
    std::vector<std::string>      names_;
    std::map<GenSym, std::size_t> index_;
  };

  namespace detail {
    inline std::string trim(std::string_view s) {
      std::size_t b = 0, e = s.size();
      while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
      }
      while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
      }
      return std::string(s.substr(b, e - b));
    }
  }  // namespace detail

  // Parses the presentation text format. Errors carry 1-based line and column.
  inline Presentation parse_presentation(std::string_view text) {
    std::string                    label;
    std::vector<GenSym>            gens;
    std::map<GenSym, std::size_t>  seen;
    struct PendingRel {
      std::vector<Syllable> lhs, rhs;
      bool                  equality = false;
      std::string           name;
    };
    std::vector<PendingRel> rels;

    std::size_t lineno = 0;
    std::size_t pos    = 0;
    while (pos <= text.size()) {
      std::size_t      nl   = text.find('\n', pos);
      std::string_view line = text.substr(
          pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
      pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
      ++lineno;

      std::string comment;
      std::size_t hash = line.find('#');
      if (hash != std::string_view::npos) {
        comment = detail::trim(line.substr(hash + 1));
        line    = line.substr(0, hash);
      }
      std::string body = detail::trim(line);
      if (body.empty()) {
        if (comment.rfind("label:", 0) == 0 && gens.empty() && rels.empty()) {
          label = detail::trim(std::string_view(comment).substr(6));
        }
        continue;
      }
      std::size_t lead  = line.find_first_not_of(" \t\r");
      std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'gens:' or 'rel:'", lineno, lead + 1);
      }
      std::string keyword = detail::trim(line.substr(0, colon));
      std::string_view rest = line.substr(colon + 1);

      // Tokenize rest, remembering columns.
      struct Token {
        std::string text;
        std::size_t column;
      };
      std::vector<Token> toks;
      for (std::size_t i = 0; i < rest.size();) {
        if (std::isspace(static_cast<unsigned char>(rest[i]))) {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) {
          ++j;
        }
        toks.push_back(Token{std::string(rest.substr(i, j - i)), colon + 2 + i});
        i = j;
      }

      if (keyword == "gens") {
        for (auto const& t : toks) {
          GenSym g;
          try {
            g = GenSym::parse(t.text);
          } catch (ParseError const& e) {
            throw ParseError(e.what(), lineno, t.column);
          }
          if (!seen.emplace(g, gens.size()).second) {
            throw ParseError("duplicate generator '" + t.text + "'", lineno, t.column);
          }
          gens.push_back(g);
        }
      } else if (keyword == "rel") {
        if (toks.empty()) {
          continue;
        }
        PendingRel pr;
        pr.name = comment;
        for (auto const& t : toks) {
          if (t.text == "=") {
            if (pr.equality) {
              throw ParseError("more than one '='", lineno, t.column);
            }
            pr.equality = true;
            continue;
          }
          std::string name = t.text;
          int         exp  = 1;
          if (auto k = name.find('^'); k != std::string::npos) {
            if (name.substr(k) != "^-1") {
              throw ParseError("bad exponent in '" + t.text + "'", lineno,
                               t.column + k);
            }
            exp  = -1;
            name = name.substr(0, k);
          }
          GenSym g;
          try {
            g = GenSym::parse(name);
          } catch (ParseError const& e) {
            throw ParseError(e.what(), lineno, t.column);
          }
          if (seen.count(g) == 0) {
            throw ParseError("unknown generator '" + name + "'", lineno, t.column);
          }
          (pr.equality ? pr.rhs : pr.lhs).push_back(Syllable{g, exp});
        }
        if (pr.equality && (pr.lhs.empty() || pr.rhs.empty())) {
          throw ParseError("equality needs syllables on both sides", lineno,
                           toks.front().column);
        }
        rels.push_back(std::move(pr));
      } else {
        throw ParseError("unknown keyword '" + keyword + "'", lineno, lead + 1);
      }
    }

    Presentation p(label, gens);
    for (auto& r : rels) {
      if (r.equality) {
        p.add_equality(Word(r.lhs), Word(r.rhs), r.name);
      } else {
        p.add_relator(Word(r.lhs), r.name);
      }
    }
    return p;
  }

  // Inverse of parse_presentation for presentations without trivial relators;
  // the text format has no spelling for an empty relator, so those are skipped.
  inline std::string print_presentation(Presentation const& p) {
    std::string out;
    if (!p.label().empty()) {
      out += "# label: " + p.label() + "\n";
    }
    out += "gens:";
    for (auto const& g : p.generators()) {
      out += ' ' + g.name();
    }
    out += '\n';
    for (std::size_t i = 0; i < p.relators().size(); ++i) {
      if (p.relators()[i].empty()) {
        continue;
      }
      out += "rel: " + p.relators()[i].to_string();
      if (!p.relator_names()[i].empty()) {
        out += "  # " + p.relator_names()[i];
      }
      out += '\n';
    }
    return out;
  }

}  // namespace knotcover
