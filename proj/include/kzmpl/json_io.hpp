#ifndef KZMPL_JSON_IO_HPP
#define KZMPL_JSON_IO_HPP

// JSON schemas:
//   WordPoly   [{"word":"011","num":-2,"den":1}, ...]            canonical order
//   NCSeries   {"order":N,"entries":[{"word":w,"re":x,"im":y}]}  zeros omitted
//              (rational scalars use "num"/"den" instead of "re"/"im")
//   Associator NCSeries entries extended with an "err" field
//   ZetaTable  [{"word":w,"mzv_indices":"(2,1)","value":v,"err":e}, ...]
// Integer fields fall back to decimal strings when they exceed int64.

#include <json.hpp>

#include "kzmpl/eval.hpp"
#include "kzmpl/kz.hpp"
#include "kzmpl/nc_series.hpp"
#include "kzmpl/words.hpp"

namespace kzmpl {

nlohmann::json to_json(const WordPoly& p);
WordPoly word_poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NCSeriesQ& s);
nlohmann::json to_json(const NCSeriesC& s);
NCSeriesC nc_series_c_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Associator& phi);
nlohmann::json to_json(const ZetaTable& table);

} // namespace kzmpl

#endif
