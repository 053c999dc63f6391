#pragma once

#include <filesystem>
#include <string>

#include "netpriv/fobs.hpp"
#include "netpriv/rational.hpp"

namespace netpriv::cli {

enum class SystemFormat { Auto, Matrix, EdgeList };

struct ParsedSystem {
    MatrixXr a;
    std::vector<std::string> labels;
};

/// Matrix JSON `{"A": [[...]], "labels": [...]}` (row-major) or an edge list whose lines
/// read `i j a_ji` (1-based, tab or space separated). An edge line (i, j, w) sets
/// A[j][i] = w. `selfdamp i w` sets A[i][i] = w, `nodes N` fixes n, `#` starts a comment.
ParsedSystem parse_system(const std::filesystem::path& path, SystemFormat format);
ParsedSystem parse_matrix_json(const std::string& text);
ParsedSystem parse_edge_list(const std::string& text);

/// Privacy presets: `full`, `average`, `targets=i1,i2,...`, `clusters=[S1;S2;...]`
/// (clusters are comma-separated 1-based indices), or `file=path` for `{"F": [[...]]}`.
MatrixXr build_privacy(const std::string& preset, Index n);

/// `{"C": [[...]]}`.
MatrixXr parse_output_matrix(const std::filesystem::path& path);

/// `{"W": [[...]]}` with integer entries.
RationalMatrix parse_w(const std::filesystem::path& path);

/// Comma-separated 1-based indices into a sorted 0-based set.
IndexSet parse_index_list(const std::string& text, Index n);

std::string read_file(const std::filesystem::path& path);

}  // namespace netpriv::cli
