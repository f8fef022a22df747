#include "hc/emit.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hc {

namespace {

using nlohmann::json;

std::string iso_flag(const MinRecord& rec) {
    for (const auto& mt : rec.types)
        if (mt.kind == IsoKind::Scalene) return "N";
    return "I";
}

json record_to_json(const MinRecord& rec) {
    json types = json::array();
    for (const auto& mt : rec.types) {
        json impls = json::array();
        for (const auto& q : mt.implementations) impls.push_back({q.m, q.n, q.k, q.l});
        types.push_back({{"sides", {mt.type.l0sq, mt.type.l1sq, mt.type.l2sq}},
                         {"kind", mt.kind == IsoKind::RightIsosceles ? "right-isosceles"
                                  : mt.kind == IsoKind::Isosceles    ? "isosceles"
                                                                     : "scalene"},
                         {"implementations", impls}});
    }
    json j = {{"d2", rec.d2},          {"S", rec.s},           {"class", to_string(rec.label)},
              {"iso", iso_flag(rec)},  {"pgs", rec.pgs_count}, {"types", types}};
    if (rec.egm_count) j["egm"] = *rec.egm_count;
    if (rec.sliding) {
        json apexes = json::array();
        for (const auto& a : rec.sliding->apexes) apexes.push_back({a.x, a.y});
        j["sliding"] = {{"w", {rec.sliding->w.x, rec.sliding->w.y}},
                        {"apexes", apexes},
                        {"S", rec.sliding->s}};
    }
    return j;
}

json row_to_json(const SlidingRow& row) {
    json apexes = json::array();
    for (const auto& a : row.apexes) apexes.push_back({a.x, a.y});
    return {{"d2", row.d2}, {"w", {row.w.x, row.w.y}}, {"apexes", apexes}, {"S", row.s}};
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
    if (name == "text") return OutputFormat::Text;
    if (name == "csv") return OutputFormat::Csv;
    if (name == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown output format: " + name);
}

std::string emit_records_text(const std::vector<MinRecord>& records) {
    std::ostringstream os;
    for (const auto& rec : records) {
        os << rec.d2 << " " << rec.s << " " << to_string(rec.label) << " " << iso_flag(rec) << " "
           << rec.pgs_count;
        if (rec.egm_count) os << " " << *rec.egm_count;
        for (const auto& mt : rec.types) {
            os << "  " << to_string(mt.type) << " x" << mt.implementations.size();
        }
        os << "\n";
    }
    return os.str();
}

std::string emit_records_csv(const std::vector<MinRecord>& records) {
    std::ostringstream os;
    os << "d2,S,class,iso,pgs,egm\n";
    for (const auto& rec : records) {
        os << rec.d2 << ',' << rec.s << ',' << to_string(rec.label) << ',' << iso_flag(rec) << ','
           << rec.pgs_count << ',';
        if (rec.egm_count) os << *rec.egm_count;
        os << '\n';
    }
    return os.str();
}

std::string emit_records_json(const std::vector<MinRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) arr.push_back(record_to_json(rec));
    return arr.dump(2) + "\n";
}

std::vector<MinRecord> records_from_json(const std::string& text) {
    const json arr = json::parse(text);
    std::vector<MinRecord> out;
    for (const auto& j : arr) {
        MinRecord rec;
        rec.d2 = j.at("d2").get<i64>();
        rec.s = j.at("S").get<i64>();
        const std::string label = j.at("class").get<std::string>();
        rec.label = label == "S"    ? ClassLabel::S
                    : label == "A"  ? ClassLabel::A
                    : label == "B0" ? ClassLabel::B0
                    : label == "B1" ? ClassLabel::B1
                                    : ClassLabel::B2;
        rec.pgs_count = j.at("pgs").get<i64>();
        if (j.contains("egm")) rec.egm_count = j.at("egm").get<i64>();
        for (const auto& tj : j.at("types")) {
            MinimalType mt;
            const auto& sides = tj.at("sides");
            mt.type = {sides.at(0).get<i64>(), sides.at(1).get<i64>(), sides.at(2).get<i64>()};
            const std::string kind = tj.at("kind").get<std::string>();
            mt.kind = kind == "right-isosceles" ? IsoKind::RightIsosceles
                      : kind == "isosceles"     ? IsoKind::Isosceles
                                                : IsoKind::Scalene;
            for (const auto& ij : tj.at("implementations"))
                mt.implementations.push_back({ij.at(0).get<i64>(), ij.at(1).get<i64>(),
                                              ij.at(2).get<i64>(), ij.at(3).get<i64>()});
            rec.types.push_back(std::move(mt));
        }
        out.push_back(std::move(rec));
    }
    return out;
}

std::string emit_sliding_text(const std::vector<SlidingRow>& rows) {
    std::ostringstream os;
    for (const auto& row : rows) {
        os << row.d2 << "=";
        bool first = true;
        for (i64 j = 0; j * j * 2 <= row.d2; ++j) {
            // decompositions printed largest-first like the source rows
            const i64 rem = row.d2 - j * j;
            const i64 i = i64(std::sqrt(double(rem)));
            for (i64 ii = i - 1; ii <= i + 1; ++ii)
                if (ii >= j && ii * ii == rem) {
                    if (!first) os << "=";
                    os << ii << "^2+" << j << "^2";
                    first = false;
                }
        }
        os << " (" << row.w.x << "," << row.w.y << ") [";
        for (std::size_t i = 0; i < row.apexes.size(); ++i) {
            if (i) os << ",";
            os << "(" << row.apexes[i].x << "," << row.apexes[i].y << ")";
        }
        os << "] " << row.s << "\n";
    }
    return os.str();
}

std::string emit_sliding_csv(const std::vector<SlidingRow>& rows) {
    std::ostringstream os;
    os << "d2,m,n,wx,wy,apexes,S\n";
    for (const auto& row : rows) {
        i64 dm = 0, dn = 0;
        for (i64 j = 0; j * j * 2 <= row.d2; ++j) {
            const i64 rem = row.d2 - j * j;
            const i64 i = i64(std::sqrt(double(rem)));
            for (i64 ii = i - 1; ii <= i + 1; ++ii)
                if (ii >= j && ii * ii == rem) {
                    dm = ii;
                    dn = j;
                }
        }
        os << row.d2 << ',' << dm << ',' << dn << ',' << row.w.x << ',' << row.w.y << ',';
        for (std::size_t i = 0; i < row.apexes.size(); ++i) {
            if (i) os << ';';
            os << row.apexes[i].x << ' ' << row.apexes[i].y;
        }
        os << ',' << row.s << '\n';
    }
    return os.str();
}

std::string emit_sliding_json(const std::vector<SlidingRow>& rows) {
    json arr = json::array();
    for (const auto& row : rows) arr.push_back(row_to_json(row));
    return arr.dump(2) + "\n";
}

std::vector<SlidingRow> sliding_from_json(const std::string& text) {
    const json arr = json::parse(text);
    std::vector<SlidingRow> out;
    for (const auto& j : arr) {
        SlidingRow row;
        row.d2 = j.at("d2").get<i64>();
        row.w = {j.at("w").at(0).get<i64>(), j.at("w").at(1).get<i64>()};
        row.s = j.at("S").get<i64>();
        for (const auto& aj : j.at("apexes")) row.apexes.push_back({aj.at(0).get<i64>(), aj.at(1).get<i64>()});
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<SlidingRow> rows_from_instances(const std::vector<ScanInstance>& instances) {
    std::vector<SlidingRow> out;
    for (const auto& inst : instances) {
        SlidingRow row;
        row.d2 = inst.d2;
        row.w = inst.w;
        row.apexes = inst.apexes;
        row.s = inst.s;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace hc
