#pragma once

#include <string>

#include "casbound/character.hpp"

namespace casbound {

// Optional on-disk cache for branching results.  Disabled unless a directory
// is configured here or through the CASBOUND_CACHE_DIR environment variable.
// Entries are content-addressed by the embedding identity and the weight;
// writes go through a temp file + rename so concurrent runs stay consistent.
void set_cache_dir(const std::string& dir);  // empty string disables
std::string cache_dir();

bool disk_cache_load(const std::string& emb_key, const Weight& gamma, int h_rank,
                     Decomposition& out);
void disk_cache_store(const std::string& emb_key, const Weight& gamma, const Decomposition& dec);

}  // namespace casbound
