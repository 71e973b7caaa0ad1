#pragma once

#include <string>

#include "clusterhodge/counts.hpp"
#include "clusterhodge/exchange.hpp"
#include "clusterhodge/filtration.hpp"
#include "clusterhodge/graph.hpp"
#include "clusterhodge/gysin.hpp"
#include "clusterhodge/topology.hpp"

namespace clusterhodge::io {

/// Text: "n m", then n+m rows of n integers; '#' lines ignored. JSON: {"n","m","rows"}.
/// Throws ParseError, then whatever validate() throws.
ExtendedExchangeMatrix parse_matrix(const std::string& content);
ExtendedExchangeMatrix read_matrix_file(const std::string& path);
std::string matrix_to_json(const ExtendedExchangeMatrix& b);

/// Text: vertex count v, then "u w" edges with 1-based labels; '#' lines ignored.
Graph parse_graph(const std::string& content);
Graph read_graph_file(const std::string& path);
std::string graph_to_text(const Graph& g);

/// {"n","m","d","hodge":[{"k","s","dim"}...]} plus polynomial views.
std::string hodge_to_json(const HodgeTable& t);
/// Inverse of hodge_to_json; extra keys are ignored. Throws ParseError.
HodgeTable hodge_from_json(const std::string& content);
/// Header "k\ts\tdim", rows ordered by (k, s).
std::string hodge_to_tsv(const HodgeTable& t);
std::string hodge_to_text(const HodgeTable& t);

/// Coefficient array, low degree first.
std::string coefficients_json(const IntPolynomial& p);

std::string pointcount_to_json(const PointCount& pc);

/// Header "r\te\tf\ts\tdim".
std::string pages_to_tsv(const SpectralSequence& ss);
/// Differentials as "r e f s row col value" triplets.
std::string differentials_to_tsv(const SpectralSequence& ss);
std::string pages_to_json(const SpectralSequence& ss);
std::string page_to_tsv(const SpectralSequencePage& page);
std::string page_to_json(const SpectralSequencePage& page);

std::string report_to_json(const ConsistencyReport& rep);
std::string report_to_text(const ConsistencyReport& rep);

}  // namespace clusterhodge::io
