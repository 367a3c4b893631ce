#pragma once

// JSON encodings. All lists are emitted in a canonical order so documents are
// byte-stable: weights lexicographically, exponents ascending, Hecke terms by
// (length, Omega index, reduced word).

#include <filesystem>
#include <string>

#include <json.hpp>

#include "exotic/charring.hpp"
#include "exotic/hecke.hpp"
#include "exotic/kmodule.hpp"
#include "exotic/tiltmult.hpp"

namespace exotic::json_io {

using nlohmann::json;

inline constexpr int kCacheVersion = 1;
inline constexpr const char* kCacheFormat = "exotic-partition-cache";

json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const json& j);

json to_json(const Weight& w);
Weight weight_from_json(const json& j);

// {finite: rows of the matrix on fundamental coordinates, translation, word}
json to_json(const AffineWeylGroup& g, const AffineElement& x);
AffineElement element_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const HeckeAlgebra& alg, const HeckeElement& x);
HeckeElement hecke_from_json(const AffineWeylGroup& g, const json& j);

json to_json(const KClass& c);
KClass kclass_from_json(const json& j);

json to_json(const CharacterMultiset& cm);
CharacterMultiset charset_from_json(const json& j);
CharacterMultiset load_charset(const std::filesystem::path& path);

json to_json(const ReconcileReport& r);

// Merges the cached partition table for ring.roots().name() into ring.
// Missing files, unreadable files and version mismatches are ignored.
// Returns true if a table was loaded.
bool load_cache(const std::filesystem::path& path, CharacterRing& ring);
// Writes ring's table into the cache file, keeping tables for other root systems.
void save_cache(const std::filesystem::path& path, const CharacterRing& ring);

}  // namespace exotic::json_io
