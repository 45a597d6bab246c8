#pragma once

#include <string>
#include <vector>

#include "accyc/groupscan.hpp"
#include "accyc/matgf.hpp"

namespace accyc {

/// Native matrix text format: header `gfmat p k rows cols`, then rows lines
/// of cols whitespace-separated canonical element encodings. Bit-exact
/// round-trip with write_gfmat.
Mat parse_gfmat(const std::string& text);
std::string write_gfmat(const Mat& m);

/// Mode-1 MeatAxe ASCII: header `1 q rows cols`; body is rows of concatenated
/// single digits when q < 10, whitespace-separated integers otherwise.
/// Lenient about line wrapping, strict about counts. For prime-power q the
/// file's integer encodings are taken as-is as canonical encodings (a warning
/// records the assumption, since wild files sometimes mean generator powers).
struct IngestRecord {
  std::string source;
  std::string format;  // "gfmat", "meataxe", "group"
  Field ctx;
  std::vector<Mat> mats;
  std::vector<std::string> warnings;
};

Mat parse_meataxe_ascii(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Group spec file: header `group p k dim ngen [name] [order]`, then ngen
/// matrices in gfmat body format (dim lines of dim entries each).
GroupSpec parse_group_file(const std::string& text);
std::string write_group_file(const GroupSpec& spec);

/// Detect format from the first token (gfmat / group / integer header).
IngestRecord ingest(const std::string& path);
IngestRecord ingest_text(const std::string& text, const std::string& source_name);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace accyc
