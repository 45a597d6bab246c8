#include "accyc/formats.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace accyc {

namespace {

struct Tokens {
  std::vector<std::string> toks;
  size_t pos = 0;
  bool done() const { return pos >= toks.size(); }
  const std::string& next(Errc code, const std::string& what) {
    if (done()) fail(code, "unexpected end of input, expected " + what);
    return toks[pos++];
  }
};

Tokens tokenize(const std::string& text) {
  Tokens t;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) t.toks.push_back(tok);
  return t;
}

uint64_t parse_u64(const std::string& tok, Errc code, const std::string& what) {
  if (tok.empty()) fail(code, what + " is empty");
  for (char c : tok)
    if (!std::isdigit((unsigned char)c)) fail(code, what + " is not a number: " + tok);
  return std::stoull(tok);
}

}  // namespace

Mat parse_gfmat(const std::string& text) {
  Tokens t = tokenize(text);
  if (t.next(Errc::BadHeader, "gfmat magic") != "gfmat")
    fail(Errc::BadHeader, "missing gfmat magic");
  uint64_t p = parse_u64(t.next(Errc::BadHeader, "p"), Errc::BadHeader, "p");
  uint64_t k = parse_u64(t.next(Errc::BadHeader, "k"), Errc::BadHeader, "k");
  uint64_t rows = parse_u64(t.next(Errc::BadHeader, "rows"), Errc::BadHeader, "rows");
  uint64_t cols = parse_u64(t.next(Errc::BadHeader, "cols"), Errc::BadHeader, "cols");
  Field ctx;
  try {
    ctx = field_create((uint32_t)p, (uint32_t)k);
  } catch (const Error& e) {
    fail(Errc::BadHeader, std::string("bad field parameters: ") + e.what());
  }
  std::vector<uint32_t> entries;
  entries.reserve(rows * cols);
  for (uint64_t i = 0; i < rows * cols; ++i) {
    if (t.done()) fail(Errc::CountMismatch, "truncated body");
    uint64_t v = parse_u64(t.toks[t.pos++], Errc::CountMismatch, "entry");
    if (v >= ctx->q()) fail(Errc::EntryOutOfRange, "entry " + std::to_string(v) + " >= q");
    entries.push_back((uint32_t)v);
  }
  if (!t.done()) fail(Errc::CountMismatch, "trailing data after body");
  return Mat(ctx, rows, cols, std::move(entries));
}

std::string write_gfmat(const Mat& m) {
  std::ostringstream out;
  out << "gfmat " << m.ctx()->p() << " " << m.ctx()->k() << " " << m.rows() << " " << m.cols()
      << "\n";
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out << " ";
      out << m.at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

Mat parse_meataxe_ascii(const std::string& text, std::vector<std::string>* warnings) {
  Tokens t = tokenize(text);
  uint64_t mode = parse_u64(t.next(Errc::BadHeader, "mode"), Errc::BadHeader, "mode");
  if (mode != 1) fail(Errc::UnsupportedMode, "only mode-1 matrix files are supported");
  uint64_t q = parse_u64(t.next(Errc::BadHeader, "q"), Errc::BadHeader, "q");
  uint64_t rows = parse_u64(t.next(Errc::BadHeader, "rows"), Errc::BadHeader, "rows");
  uint64_t cols = parse_u64(t.next(Errc::BadHeader, "cols"), Errc::BadHeader, "cols");
  std::pair<BigInt, unsigned> pk;
  try {
    pk = prime_power_decompose(BigInt(q));
  } catch (const Error&) {
    fail(Errc::BadHeader, "q is not a prime power");
  }
  Field ctx = field_create((uint32_t)(uint64_t)pk.first, pk.second);
  if (pk.second > 1 && warnings)
    warnings->push_back("non-prime q " + std::to_string(q) +
                        ": file encodings taken as canonical polynomial-basis encodings");
  std::vector<uint32_t> entries;
  entries.reserve(rows * cols);
  if (q < 10) {
    // concatenated single digits; line wrapping is irrelevant
    for (; t.pos < t.toks.size(); ++t.pos)
      for (char c : t.toks[t.pos]) {
        if (!std::isdigit((unsigned char)c)) fail(Errc::CountMismatch, "non-digit in body");
        uint32_t v = (uint32_t)(c - '0');
        if (v >= q) fail(Errc::EntryOutOfRange, "digit " + std::to_string(v) + " >= q");
        entries.push_back(v);
      }
  } else {
    for (; t.pos < t.toks.size(); ++t.pos) {
      uint64_t v = parse_u64(t.toks[t.pos], Errc::CountMismatch, "entry");
      if (v >= q) fail(Errc::EntryOutOfRange, "entry " + std::to_string(v) + " >= q");
      entries.push_back((uint32_t)v);
    }
  }
  if (entries.size() != rows * cols)
    fail(Errc::CountMismatch, "body has " + std::to_string(entries.size()) + " entries, expected " +
                                  std::to_string(rows * cols));
  return Mat(ctx, rows, cols, std::move(entries));
}

GroupSpec parse_group_file(const std::string& text) {
  Tokens t = tokenize(text);
  if (t.next(Errc::BadHeader, "group magic") != "group")
    fail(Errc::BadHeader, "missing group magic");
  uint64_t p = parse_u64(t.next(Errc::BadHeader, "p"), Errc::BadHeader, "p");
  uint64_t k = parse_u64(t.next(Errc::BadHeader, "k"), Errc::BadHeader, "k");
  uint64_t dim = parse_u64(t.next(Errc::BadHeader, "dim"), Errc::BadHeader, "dim");
  uint64_t ngen = parse_u64(t.next(Errc::BadHeader, "ngen"), Errc::BadHeader, "ngen");
  GroupSpec spec;
  spec.ctx = field_create((uint32_t)p, (uint32_t)k);
  spec.dim = dim;

  // optional [name] [order]: order is a trailing integer, name any other token
  size_t body_needed = ngen * dim * dim;
  std::vector<std::string> extra;
  while (t.toks.size() - t.pos > body_needed) extra.push_back(t.toks[t.pos++]);
  for (size_t i = 0; i < extra.size(); ++i) {
    bool numeric = !extra[i].empty() &&
                   std::all_of(extra[i].begin(), extra[i].end(),
                               [](char c) { return std::isdigit((unsigned char)c); });
    if (numeric && i + 1 == extra.size())
      spec.expected_order = std::stoull(extra[i]);
    else if (spec.name.empty())
      spec.name = extra[i];
    else
      fail(Errc::BadHeader, "unexpected header token: " + extra[i]);
  }

  for (uint64_t g = 0; g < ngen; ++g) {
    std::vector<uint32_t> entries;
    entries.reserve(dim * dim);
    for (uint64_t i = 0; i < dim * dim; ++i) {
      if (t.done()) fail(Errc::CountMismatch, "truncated generator body");
      uint64_t v = parse_u64(t.toks[t.pos++], Errc::CountMismatch, "entry");
      if (v >= spec.ctx->q()) fail(Errc::EntryOutOfRange, "entry >= q");
      entries.push_back((uint32_t)v);
    }
    spec.gens.push_back(Mat(spec.ctx, dim, dim, std::move(entries)));
  }
  if (!t.done()) fail(Errc::CountMismatch, "trailing data after generators");
  validate_group_spec(spec);
  return spec;
}

std::string write_group_file(const GroupSpec& spec) {
  std::ostringstream out;
  out << "group " << spec.ctx->p() << " " << spec.ctx->k() << " " << spec.dim << " "
      << spec.gens.size();
  if (!spec.name.empty()) out << " " << spec.name;
  if (spec.expected_order) out << " " << *spec.expected_order;
  out << "\n";
  for (const Mat& g : spec.gens) {
    for (size_t i = 0; i < g.rows(); ++i) {
      for (size_t j = 0; j < g.cols(); ++j) {
        if (j) out << " ";
        out << g.at(i, j);
      }
      out << "\n";
    }
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::BadHeader, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::BadHeader, "cannot write " + path);
  out << content;
}

IngestRecord ingest_text(const std::string& text, const std::string& source_name) {
  IngestRecord rec;
  rec.source = source_name;
  Tokens t = tokenize(text);
  if (t.done()) fail(Errc::BadHeader, "empty input");
  const std::string& first = t.toks[0];
  if (first == "gfmat") {
    rec.format = "gfmat";
    Mat m = parse_gfmat(text);
    rec.ctx = m.ctx();
    rec.mats.push_back(std::move(m));
  } else if (first == "group") {
    rec.format = "group";
    GroupSpec spec = parse_group_file(text);
    rec.ctx = spec.ctx;
    for (auto& g : spec.gens) rec.mats.push_back(g);
  } else {
    rec.format = "meataxe";
    Mat m = parse_meataxe_ascii(text, &rec.warnings);
    rec.ctx = m.ctx();
    rec.mats.push_back(std::move(m));
  }
  return rec;
}

IngestRecord ingest(const std::string& path) { return ingest_text(read_file(path), path); }

}  // namespace accyc
