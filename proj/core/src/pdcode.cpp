#include <knotsum/pdcode.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include <knotsum/errors.hpp>

namespace knotsum {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
  }

  int parse_int() {
    skip_ws();
    std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    if (pos_ >= text_.size() || text_[pos_] < '1' || text_[pos_] > '9') {
      throw ParseError("expected a nonzero integer without leading zeros",
                       start);
    }
    long value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000'000L) throw ParseError("integer too large", start);
      ++pos_;
    }
    return static_cast<int>(negative ? -value : value);
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("trailing characters after code", pos_);
    }
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

int succ(int label, int edge_count) { return label % edge_count + 1; }

// Restart the quadruple at the old incoming over-edge (crossing switch).
Quad mirror_quad(const Quad& q) {
  if (q[1] > 0) return Quad{q[1], q[2], q[3], q[0]};
  return Quad{q[3], q[0], q[1], q[2]};
}

// Restart at the old outgoing under-edge; flip signs, relabel k -> 2n+1-k.
Quad reverse_quad(const Quad& q, int edge_count) {
  auto rho = [edge_count](int x) {
    return x > 0 ? -(edge_count + 1 - x) : edge_count + 1 + x;
  };
  return Quad{rho(q[2]), rho(q[3]), rho(q[0]), rho(q[1])};
}

void require_valid(const PdCode& code, const char* op) {
  if (auto v = validate(code)) {
    throw Error(std::string(op) + ": invalid PD-code: " + v->message);
  }
}

}  // namespace

PdCode parse_pdcode_raw(std::string_view text) {
  Scanner s(text);
  s.expect('[');
  PdCode code;
  if (s.consume(']')) {
    s.expect_end();
    return code;
  }
  do {
    s.expect('[');
    Quad q;
    for (int i = 0; i < 4; ++i) {
      if (i > 0) s.expect(',');
      q[i] = s.parse_int();
    }
    s.expect(']');
    code.quads.push_back(q);
  } while (s.consume(','));
  s.expect(']');
  s.expect_end();
  return code;
}

PdCode parse_pdcode(std::string_view text) {
  PdCode code = parse_pdcode_raw(text);
  if (auto v = validate(code)) {
    throw Error("invalid PD-code: " + v->message);
  }
  return code;
}

std::string serialize(const PdCode& code) {
  std::string out = "[";
  for (std::size_t i = 0; i < code.quads.size(); ++i) {
    if (i > 0) out += ',';
    out += '[';
    for (int j = 0; j < 4; ++j) {
      if (j > 0) out += ',';
      out += std::to_string(code.quads[i][j]);
    }
    out += ']';
  }
  out += ']';
  return out;
}

std::optional<PdViolation> validate(const PdCode& code) {
  const int n2 = code.edge_count();
  // label range
  for (std::size_t i = 0; i < code.quads.size(); ++i) {
    for (int x : code.quads[i]) {
      if (x == 0 || x < -n2 || x > n2) {
        return PdViolation{"label " + std::to_string(x) +
                               " outside 1.." + std::to_string(n2),
                           static_cast<int>(i)};
      }
    }
  }
  // each label once per sign
  std::vector<int> pos(n2 + 1, 0), neg(n2 + 1, 0);
  for (const Quad& q : code.quads) {
    for (int x : q) {
      if (x > 0) ++pos[x];
      else ++neg[-x];
    }
  }
  for (int k = 1; k <= n2; ++k) {
    if (pos[k] != 1) {
      return PdViolation{"label " + std::to_string(k) + " appears " +
                         std::to_string(pos[k]) +
                         " times with positive sign (expected once)"};
    }
    if (neg[k] != 1) {
      return PdViolation{"label " + std::to_string(k) + " appears " +
                         std::to_string(neg[k]) +
                         " times with negative sign (expected once)"};
    }
  }
  // per-quadruple structure
  for (std::size_t i = 0; i < code.quads.size(); ++i) {
    const Quad& q = code.quads[i];
    const int idx = static_cast<int>(i);
    if (q[0] <= 0) {
      return PdViolation{"first entry must be the positive incoming under-edge",
                         idx};
    }
    if (q[2] != -succ(q[0], n2)) {
      return PdViolation{"under-strand not consecutive: expected " +
                             std::to_string(-succ(q[0], n2)) + " opposite " +
                             std::to_string(q[0]),
                         idx};
    }
    const bool b_pos = q[1] > 0;
    const bool d_pos = q[3] > 0;
    if (b_pos == d_pos) {
      return PdViolation{
          "over-strand must have exactly one incoming (positive) edge", idx};
    }
    const int in = b_pos ? q[1] : q[3];
    const int out = b_pos ? q[3] : q[1];
    if (out != -succ(in, n2)) {
      return PdViolation{"over-strand not consecutive: expected " +
                             std::to_string(-succ(in, n2)) + " opposite " +
                             std::to_string(in),
                         idx};
    }
  }
  return std::nullopt;
}

PdCode apply_gamma(GammaElement g, const PdCode& code) {
  require_valid(code, "apply_gamma");
  PdCode out = code;
  if (g.eps0 < 0) {
    for (Quad& q : out.quads) q = mirror_quad(q);
  }
  if (g.eps1 < 0) {
    const int n2 = out.edge_count();
    for (Quad& q : out.quads) q = reverse_quad(q, n2);
  }
  return out;
}

PdCode connected_sum(const PdCode& d1, const PdCode& d2) {
  if (d1.empty() || d2.empty()) {
    throw Error("connected_sum: inputs must be nonempty");
  }
  require_valid(d1, "connected_sum");
  require_valid(d2, "connected_sum");
  const int n2 = d2.edge_count();

  PdCode out;
  out.quads.reserve(d1.quads.size() + d2.quads.size());
  // shift d1's labels past d2's, keeping the label -1 in place
  for (const Quad& q : d1.quads) {
    Quad r;
    for (int j = 0; j < 4; ++j) {
      int x = q[j];
      r[j] = (x == -1) ? -1 : (x > 0 ? x + n2 : x - n2);
    }
    out.quads.push_back(r);
  }
  // splice: in d2's quadruple containing +n2, the -1 becomes -(n2+1)
  for (const Quad& q : d2.quads) {
    Quad r = q;
    if (std::find(q.begin(), q.end(), n2) != q.end()) {
      *std::find(r.begin(), r.end(), -1) = -(n2 + 1);
    }
    out.quads.push_back(r);
  }
  return out;
}

PdCode connected_sum_list(const std::vector<PdCode>& codes) {
  if (codes.empty()) throw Error("connected_sum_list: empty list");
  PdCode acc = codes.front();
  for (std::size_t i = 1; i < codes.size(); ++i) {
    acc = connected_sum(acc, codes[i]);
  }
  return acc;
}

PdCode canonical_form(const PdCode& code) {
  require_valid(code, "canonical_form");
  if (code.empty()) return code;
  const int n2 = code.edge_count();
  PdCode best;
  for (int s = 0; s < n2; ++s) {
    PdCode cand;
    cand.quads.reserve(code.quads.size());
    for (const Quad& q : code.quads) {
      Quad r;
      for (int j = 0; j < 4; ++j) {
        int mag = (std::abs(q[j]) - 1 + s) % n2 + 1;
        r[j] = q[j] > 0 ? mag : -mag;
      }
      cand.quads.push_back(r);
    }
    std::sort(cand.quads.begin(), cand.quads.end(),
              [](const Quad& a, const Quad& b) { return a[0] < b[0]; });
    if (s == 0 || cand < best) best = std::move(cand);
  }
  return best;
}

bool diagram_equal(const PdCode& a, const PdCode& b) {
  return canonical_form(a) == canonical_form(b);
}

}  // namespace knotsum
