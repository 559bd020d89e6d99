#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pcalab/aks.hpp"
#include "pcalab/bco.hpp"
#include "pcalab/opca.hpp"
#include "pcalab/pseudo_d.hpp"

namespace pcalab {

// Line-oriented structure files. One keyword per line, whitespace separated
// tokens, '#' starts a comment. See docs/file-formats.md.

enum class FileKind { Opca, Bco, Aks, Map };

const char* to_string(FileKind k);

/// `sup` lines of an opca file: either `sup join` or one entry per downset,
/// the downset given by generators.
struct SupSpec {
  bool join = false;
  std::vector<std::pair<Mask, Elem>> entries;
};

struct OpcaFile {
  FiniteOpca A;
  std::optional<SupSpec> sup;
};

/// Throws InputError naming source, line and field.
FileKind detect_kind(const std::string& text, const std::string& source);
OpcaFile parse_opca(const std::string& text, const std::string& source);
FiniteBco parse_bco(const std::string& text, const std::string& source);
Aks parse_aks(const std::string& text, const std::string& source);
/// `map a b` lines from elements of `src` to elements of `dst`; total.
Map parse_map(const std::string& text, const std::string& source, const FiniteOpca& src,
              const FiniteOpca& dst);

std::string read_file(const std::string& path);
OpcaFile load_opca(const std::string& path);
FiniteBco load_bco(const std::string& path);
Aks load_aks(const std::string& path);

/// Sup map of an opca file as a pseudo-D-algebra on its host.
PseudoDAlgebra pseudo_d_from(const FiniteOpca& A, const SupSpec& spec);

std::string write_opca(const FiniteOpca& A);
std::string write_aks(const Aks& K);

}  // namespace pcalab
