#pragma once

#include <bergekit/bit_matrix.hpp>
#include <bergekit/classifier.hpp>
#include <bergekit/containment.hpp>
#include <bergekit/solver.hpp>

#include <json.hpp>

namespace bergekit {

inline constexpr const char* kJsonSchema = "bergekit/1";

/// {"rows": m, "columns": ["110", ...]} with columns read top to bottom.
nlohmann::json matrix_json(const BitMatrix& a);
nlohmann::json embedding_json(const Embedding& e);
nlohmann::json solve_json(const SolveResult& r);
nlohmann::json class_json(const AsymptoticClass& c);
nlohmann::json corpus_json(const CorpusReport& report);

}  // namespace bergekit
