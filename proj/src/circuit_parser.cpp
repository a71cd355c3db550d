// Copyright 2026 The stirap-chain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

#include <fmt/format.h>

#include "stirap/circuit.hpp"

namespace stirap {
namespace {

struct Token {
  std::string_view text;
  int column;  // 1-based
};

struct Line {
  int number;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), static_cast<int>(start) + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

double parse_real(const Token& tok, int line) {
  double v = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParseError(line, tok.column, fmt::format("expected a number, got '{}'", tok.text));
  }
  return v;
}

int parse_int(const Token& tok, int line) {
  int v = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, tok.column, fmt::format("expected an integer, got '{}'", tok.text));
  }
  return v;
}

complex_t parse_complex(const Token& tok, int line) {
  const auto comma = tok.text.find(',');
  if (comma == std::string_view::npos) {
    throw ParseError(line, tok.column, fmt::format("expected 're,im', got '{}'", tok.text));
  }
  Token re{tok.text.substr(0, comma), tok.column};
  Token im{tok.text.substr(comma + 1), tok.column + static_cast<int>(comma) + 1};
  return {parse_real(re, line), parse_real(im, line)};
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  Circuit run() {
    std::optional<int> width;
    std::vector<Gate> gates;
    int last_line = 1;
    while (cursor_ < lines_.size()) {
      const Line& line = lines_[cursor_++];
      last_line = line.number;
      const Token& kw = line.tokens[0];
      if (kw.text == "qubits") {
        if (width) throw ParseError(line.number, kw.column, "duplicate 'qubits' declaration");
        expect_arity(line, 2);
        width = parse_int(line.tokens[1], line.number);
        if (*width < 1 || *width > 20) {
          throw ParseError(line.number, line.tokens[1].column, "qubit count must be in [1, 20]");
        }
      } else if (kw.text == "gate") {
        if (!width) throw ParseError(line.number, kw.column, "'gate' before 'qubits'");
        gates.push_back(parse_gate(line, *width));
      } else {
        throw ParseError(line.number, kw.column, fmt::format("unknown keyword '{}'", kw.text));
      }
    }
    if (!width) throw ParseError(last_line, 1, "missing 'qubits' declaration");
    if (gates.size() < 2 || gates.size() % 2 != 0) {
      throw ParseError(last_line, 1,
                       fmt::format("n must be even and at least 2 (got {} gates)", gates.size()));
    }
    return Circuit(*width, std::move(gates));
  }

 private:
  static void expect_arity(const Line& line, size_t count) {
    if (line.tokens.size() != count) {
      const int col = line.tokens.size() > count ? line.tokens[count].column
                                                 : line.tokens.back().column;
      throw ParseError(line.number, col,
                       fmt::format("'{}' expects {} fields, got {}", line.tokens[0].text, count,
                                   line.tokens.size()));
    }
  }

  static int qubit(const Line& line, size_t idx, int width) {
    const Token& tok = line.tokens[idx];
    const int q = parse_int(tok, line.number);
    if (q < 0 || q >= width) {
      throw ParseError(line.number, tok.column,
                       fmt::format("qubit index {} out of range for {} qubits", q, width));
    }
    return q;
  }

  Gate parse_gate(const Line& line, int width) {
    if (line.tokens.size() < 2) throw ParseError(line.number, line.tokens[0].column, "missing gate name");
    const Token& name = line.tokens[1];
    try {
      if (name.text == "h" || name.text == "t") {
        expect_arity(line, 3);
        const int q = qubit(line, 2, width);
        return name.text == "h" ? Gate::hadamard(q) : Gate::pi_over_8(q);
      }
      if (name.text == "cnot") {
        expect_arity(line, 4);
        return Gate::cnot(qubit(line, 2, width), qubit(line, 3, width));
      }
      if (name.text == "rot") {
        expect_arity(line, 9);
        const int q = qubit(line, 2, width);
        if (line.tokens[3].text != "axis") {
          throw ParseError(line.number, line.tokens[3].column, "expected 'axis'");
        }
        if (line.tokens[7].text != "angle") {
          throw ParseError(line.number, line.tokens[7].column, "expected 'angle'");
        }
        std::array<double, 3> axis{parse_real(line.tokens[4], line.number),
                                   parse_real(line.tokens[5], line.number),
                                   parse_real(line.tokens[6], line.number)};
        return Gate::rotation(q, axis, parse_real(line.tokens[8], line.number));
      }
      if (name.text == "custom") {
        if (line.tokens.size() < 3 || line.tokens.size() > 4) {
          throw ParseError(line.number, name.column, "'custom' takes 1 or 2 target qubits");
        }
        std::vector<int> targets;
        for (size_t i = 2; i < line.tokens.size(); ++i) targets.push_back(qubit(line, i, width));
        const Index dim = Index{1} << targets.size();
        CMatrix m(dim, dim);
        for (Index r = 0; r < dim; ++r) {
          if (cursor_ >= lines_.size()) {
            throw ParseError(line.number, name.column,
                             fmt::format("custom gate needs {} matrix rows", dim));
          }
          const Line& row = lines_[cursor_++];
          if (static_cast<Index>(row.tokens.size()) != dim) {
            throw ParseError(row.number, row.tokens[0].column,
                             fmt::format("matrix row needs {} 're,im' entries", dim));
          }
          for (Index c = 0; c < dim; ++c) m(r, c) = parse_complex(row.tokens[static_cast<size_t>(c)], row.number);
        }
        return Gate::custom(std::move(targets), std::move(m));
      }
    } catch (const InvalidArgument& e) {
      throw ParseError(line.number, name.column, e.what());
    }
    throw ParseError(line.number, name.column, fmt::format("unknown gate '{}'", name.text));
  }

  std::vector<Line> lines_;
  size_t cursor_ = 0;
};

}  // namespace

ParseError::ParseError(int line, int column, const std::string& message, const std::string& source)
    : std::runtime_error(source.empty() ? fmt::format("{}:{}: {}", line, column, message)
                                        : fmt::format("{}:{}:{}: {}", source, line, column, message)),
      line_(line),
      column_(column),
      message_(message) {}

Circuit parse_circuit(std::string_view text) { return Parser(text).run(); }

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_circuit(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.column(), e.message(), path);
  }
}

std::string serialize_circuit(const Circuit& circuit) {
  std::string out = fmt::format("qubits {}\n", circuit.register_width());
  for (const Gate& g : circuit.gates()) {
    const auto& t = g.targets();
    switch (g.kind()) {
      case GateKind::Hadamard:
      case GateKind::PiOver8:
        out += fmt::format("gate {} {}\n", gate_kind_name(g.kind()), t[0]);
        break;
      case GateKind::CNOT:
        out += fmt::format("gate cnot {} {}\n", t[0], t[1]);
        break;
      case GateKind::Rotation: {
        const auto& a = g.axis();
        out += fmt::format("gate rot {} axis {:.17g} {:.17g} {:.17g} angle {:.17g}\n", t[0], a[0],
                           a[1], a[2], g.angle());
        break;
      }
      case GateKind::CustomUnitary: {
        out += "gate custom";
        for (int q : t) out += fmt::format(" {}", q);
        out += '\n';
        const CMatrix& m = g.local_matrix();
        for (Index r = 0; r < m.rows(); ++r) {
          out += " ";
          for (Index c = 0; c < m.cols(); ++c) {
            out += fmt::format(" {:.17g},{:.17g}", m(r, c).real(), m(r, c).imag());
          }
          out += '\n';
        }
        break;
      }
    }
  }
  return out;
}

}  // namespace stirap
