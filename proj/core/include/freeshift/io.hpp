#pragma once

// Line-oriented text formats for groups, towers, SFT specs, explicit shift
// spaces, block maps and patterns, plus the property report format. Blank
// lines and text after '#' are ignored. Errors carry the 1-based line.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "freeshift/groups.hpp"
#include "freeshift/patterns.hpp"
#include "freeshift/shiftspace.hpp"

namespace freeshift {

// `group cyclic <n>` | `group product <file> <file>` | `group table <n>`
// followed by n rows. Product operands are resolved against `base_dir`.
GroupPtr parse_group(std::string_view text, const std::string& name = "<input>",
                     const std::filesystem::path& base_dir = {});
GroupPtr load_group(const std::filesystem::path& path);

// `tower`, then `level <groupfile>` lines interleaved with
// `embed <k> pairs i->j ...` lines mapping level k into level k+1.
GroupTower parse_tower(std::string_view text, const std::string& name = "<input>",
                       const std::filesystem::path& base_dir = {});
GroupTower load_tower(const std::filesystem::path& path);

// `sft`, `group <file>` (or an inline group definition), `alphabet ...`,
// `shape ...`, then one `forbid ...` line per forbidden pattern.
SftSpec parse_sft(std::string_view text, const std::string& name = "<input>",
                  const std::filesystem::path& base_dir = {});
SftSpec load_sft(const std::filesystem::path& path);

// `space`, `group ...`, `alphabet ...`, then one `config s1 s2 ...` line per
// configuration listing a symbol for each group element.
ShiftSpace parse_space(std::string_view text, const std::string& name = "<input>",
                       const std::filesystem::path& base_dir = {});
ShiftSpace load_space(const std::filesystem::path& path);

// `window i1 ...`, optional `target s1 ...`, then `map s1 s2 ... -> s`
// lines. Without a target line the target alphabet is `source`.
BlockMap parse_block_map(std::string_view text, const Alphabet& source, const std::string& name = "<input>");
BlockMap load_block_map(const std::filesystem::path& path, const Alphabet& source);

// `shape i1 ...` then `data s1 ...`.
Pattern parse_pattern(std::string_view text, const GroupPtr& group, const Alphabet& alphabet,
                      const std::string& name = "<input>");

// Body lines of the space format (alphabet and configs, no group line).
std::string format_space_body(const ShiftSpace& y);

struct PropertyReport {
  std::string name;
  bool pass = false;
  // Each entry may span several lines; every line is indented on output.
  std::vector<std::string> witnesses;
};

// `PROPERTY <name> PASS|FAIL` then witness lines indented by two spaces.
std::string format_property(const PropertyReport& report);

}  // namespace freeshift
