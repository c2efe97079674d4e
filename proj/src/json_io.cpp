#include "quasitoric/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace quasitoric {

namespace {

Tuple tuple_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw input_error("expected a tuple (JSON array of integers)");
    Tuple t;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw input_error("tuple entries must be integers");
        t.push_back(x.get<int>());
    }
    return t;
}

ojson tuple_to_json(const Tuple& t) { return ojson(t); }

}  // namespace

ojson index_set_to_json(const IndexSet& s) {
    ojson j;
    j["dims"] = s.dims;
    ojson tuples = ojson::array();
    for (const Tuple& t : s.tuples) tuples.push_back(tuple_to_json(t));
    j["tuples"] = tuples;
    return j;
}

IndexSet index_set_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dims") || !j.contains("tuples"))
        throw input_error("index set JSON needs \"dims\" and \"tuples\"");
    std::vector<int> dims;
    for (const auto& d : j.at("dims")) {
        if (!d.is_number_integer()) throw input_error("dims must be integers");
        dims.push_back(d.get<int>());
    }
    std::vector<Tuple> tuples;
    for (const auto& t : j.at("tuples")) tuples.push_back(tuple_from_json(t));
    return make_index_set(std::move(dims), std::move(tuples));
}

IndexSet load_index_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
    return index_set_from_json(j);
}

ojson matrix_to_json(const MultipartitionMatrix& m) {
    ojson j;
    ojson cols = ojson::array();
    for (const Tuple& t : m.columns) cols.push_back(tuple_to_json(t));
    j["columns"] = cols;
    ojson blocks = ojson::array();
    for (const MatrixBlock& block : m.blocks) {
        ojson rows = ojson::array();
        for (const MatrixRow& row : block.rows) {
            ojson r;
            r["label"] = row.label;
            r["entries"] = row.entries;
            rows.push_back(std::move(r));
        }
        ojson b;
        b["rows"] = std::move(rows);
        blocks.push_back(std::move(b));
    }
    j["blocks"] = std::move(blocks);
    return j;
}

MultipartitionMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("columns") || !j.contains("blocks"))
        throw input_error("matrix JSON needs \"columns\" and \"blocks\"");
    MultipartitionMatrix m;
    for (const auto& c : j.at("columns")) m.columns.push_back(tuple_from_json(c));
    for (const auto& b : j.at("blocks")) {
        if (!b.is_object() || !b.contains("rows"))
            throw input_error("matrix block JSON needs \"rows\"");
        MatrixBlock block;
        for (const auto& r : b.at("rows")) {
            MatrixRow row;
            row.label = r.at("label").get<std::string>();
            for (const auto& e : r.at("entries")) {
                if (!e.is_number_integer()) throw input_error("matrix entries must be integers");
                row.entries.push_back(e.get<int>());
            }
            block.rows.push_back(std::move(row));
        }
        m.blocks.push_back(std::move(block));
    }
    ValidationReport vr = validate_multipartition(m);
    if (!vr.ok) throw input_error("not a multipartition matrix: " + vr.problems.front());
    return m;
}

RatVec counts_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw input_error("counts must be a JSON array");
    RatVec u;
    for (const auto& x : j) {
        Rat r;
        if (x.is_number_integer()) {
            r = Rat(Int(std::to_string(x.get<long long>())));
        } else if (x.is_string()) {
            r = rat_from_string(x.get<std::string>());
        } else {
            throw input_error("counts must be integers or rational strings like \"3/2\"");
        }
        if (r < 0) throw input_error("counts must be nonnegative");
        u.push_back(std::move(r));
    }
    return u;
}

RatVec load_counts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("JSON parse error in '" + path + "': " + e.what());
    }
    return counts_from_json(j);
}

std::vector<double> to_double_vec(const RatVec& v) {
    std::vector<double> out;
    for (const Rat& x : v) out.push_back(rat_to_double(x));
    return out;
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

ojson rat_vec_to_json(const RatVec& v) {
    ojson out = ojson::array();
    for (const Rat& x : v) out.push_back(rat_to_string(x));
    return out;
}

ojson double_vec_to_json(const std::vector<double>& v) {
    ojson out = ojson::array();
    for (double x : v) out.push_back(format_double(x));
    return out;
}

ojson witness_to_json(const ChordalityWitness& w) {
    ojson j;
    j["kind"] = (w.kind == ChordalityWitness::Kind::InducedCycle) ? "induced_cycle"
                                                                  : "double_square";
    ojson verts = ojson::array();
    for (const GraphVertex& v : w.vertices) {
        ojson vj;
        vj["side"] = v.left ? "left" : "right";
        vj["index"] = v.idx + 1;  // states are 1-based in all I/O
        verts.push_back(std::move(vj));
    }
    j["vertices"] = std::move(verts);
    return j;
}

ojson swap_witness_to_json(const SwapWitness& w) {
    ojson j;
    j["s1"] = tuple_to_json(w.s1);
    j["s2"] = tuple_to_json(w.s2);
    j["missing"] = tuple_to_json(w.missing);
    return j;
}

ojson split_to_json(const SplitSpec& spec) {
    ojson j;
    j["j"] = spec.j;
    j["inA"] = spec.in_a;
    return j;
}

ojson factorization_to_json(const CtfpFactorization& f) {
    ojson j;
    j["split"] = split_to_json(f.spec);
    j["s1"] = index_set_to_json(f.s1);
    j["s2"] = index_set_to_json(f.s2);
    auto one_based = [](const std::vector<int>& axes) {
        std::vector<int> out;
        for (int a : axes) out.push_back(a + 1);
        return out;
    };
    j["axes_1"] = one_based(f.axes_1);
    j["axes_2"] = one_based(f.axes_2);
    j["shared_pos_1"] = f.j1 + 1;
    j["shared_pos_2"] = f.j2 + 1;
    return j;
}

ojson poset_to_json(const CliquePoset& p) {
    ojson j;
    ojson cliques = ojson::array();
    for (size_t q = 0; q < p.cliques.size(); ++q) {
        ojson cj;
        cj["rows"] = p.cliques[q].rows;
        cj["cols"] = p.cliques[q].cols;
        cj["level"] = p.levels[q];
        cliques.push_back(std::move(cj));
    }
    j["cliques"] = std::move(cliques);

    ojson inters = ojson::array();
    for (const MaxIntersection& mi : p.intersections) {
        ojson ij;
        ojson cells = ojson::array();
        for (const Cell& c : mi.cells) cells.push_back(ojson{c.first, c.second});
        ij["cells"] = std::move(cells);
        ojson gens = ojson::array();
        for (const auto& [d, e] : mi.gen_pairs) gens.push_back(ojson{d + 1, e + 1});
        ij["generated_by"] = std::move(gens);
        ij["cover_pair"] = ojson{mi.cover_pair.first + 1, mi.cover_pair.second + 1};
        ij["level"] = mi.level;
        inters.push_back(std::move(ij));
    }
    j["intersections"] = std::move(inters);

    ojson covers = ojson::array();
    for (const auto& [d, e] : p.covers) covers.push_back(ojson{d + 1, e + 1});
    j["covers"] = std::move(covers);
    j["h"] = p.h;
    return j;
}

ojson indicator_to_json(const IndicatorCombination& c) {
    ojson j;
    auto coeffs = [](const std::map<int, int>& m) {
        ojson out = ojson::array();
        for (const auto& [state, coeff] : m) out.push_back(ojson{state, coeff});
        return out;
    };
    j["row_coefficients"] = coeffs(c.row_coeffs);
    j["col_coefficients"] = coeffs(c.col_coeffs);
    j["orientation"] = c.column_oriented ? "columns" : "rows";
    ojson aj = ojson::array(), bj = ojson::array();
    for (const auto& s : c.a_sets) aj.push_back(ojson(s));
    for (const auto& s : c.b_sets) bj.push_back(ojson(s));
    j["a_sets"] = std::move(aj);
    j["b_sets"] = std::move(bj);
    return j;
}

ojson reparam_to_json(const ReparamMatrix& rep) {
    ojson j;
    j["h"] = rep.h();
    j["matrix"] = matrix_to_json(rep.matrix);
    ojson coded = ojson::array();
    for (const Tuple& t : rep.bar_tuples) coded.push_back(tuple_to_json(t));
    j["coded_columns"] = std::move(coded);
    ojson levels;
    ojson x = ojson::array(), rows = ojson::array(), cols = ojson::array();
    for (int r = 0; r <= rep.h(); ++r) {
        ojson xr = ojson::array();
        for (int mi : rep.sets.x[r])
            xr.push_back(bar_label_text({BarLabel::Kind::inter, mi}, rep.poset));
        x.push_back(std::move(xr));
        rows.push_back(ojson(rep.sets.rows[r]));
        cols.push_back(ojson(rep.sets.cols[r]));
    }
    levels["intersections"] = std::move(x);
    levels["rows"] = std::move(rows);
    levels["cols"] = std::move(cols);
    j["level_sets"] = std::move(levels);
    return j;
}

ojson internal_ctfp_to_json(const InternalCtfpReport& r) {
    ojson j;
    ojson entries = ojson::array();
    for (size_t i = 0; i < r.coordinates.size(); ++i) {
        ojson e;
        e["coordinate"] = r.coordinates[i];
        e["passed"] = static_cast<bool>(r.passed[i]);
        entries.push_back(std::move(e));
    }
    j["coordinates"] = std::move(entries);
    j["all_passed"] = r.all_passed;
    return j;
}

ojson decomposition_to_json(const std::vector<LinearDecompositionStep>& steps,
                            const ReparamMatrix& rep) {
    ojson out = ojson::array();
    for (const LinearDecompositionStep& step : steps) {
        ojson sj;
        sj["r"] = step.r;
        ojson t = ojson::array();
        for (const Tuple& tup : step.t) t.push_back(tuple_to_json(tup));
        sj["t"] = std::move(t);
        ojson tp = ojson::array();
        for (const auto& [label, mult] : step.tprime) {
            ojson e;
            e["label"] = bar_label_text(label, rep.poset);
            e["multiplicity"] = mult;
            tp.push_back(std::move(e));
        }
        sj["t_prime"] = std::move(tp);
        ojson parts = ojson::array();
        for (const DecompositionPart& part : step.parts) {
            ojson pj;
            pj["part"] = part_label_text(part.x);
            ojson g = ojson::array();
            for (int gi : part.g) g.push_back(tuple_to_json(step.t[gi]));
            pj["g"] = std::move(g);
            ojson h = ojson::array();
            for (const auto& [label, mult] : part.h) {
                ojson e;
                e["label"] = bar_label_text(label, rep.poset);
                e["multiplicity"] = mult;
                h.push_back(std::move(e));
            }
            pj["h"] = std::move(h);
            parts.push_back(std::move(pj));
        }
        sj["parts"] = std::move(parts);
        out.push_back(std::move(sj));
    }
    return out;
}

ojson lift_to_json(const LawrenceLift& l) {
    ojson j;
    j["source"] = index_set_to_json(l.source);
    j["sprime"] = index_set_to_json(l.sprime);
    j["lambda_prime"] = matrix_to_json(l.lambda_prime);
    return j;
}

ojson slice_report_to_json(const SliceScanReport& r) {
    ojson j;
    j["passed"] = r.passed;
    j["slices_checked"] = r.slices_checked;
    j["empty_slices"] = r.empty_slices;
    ojson records = ojson::array();
    for (const SliceRecord& rec : r.records) {
        ojson rj;
        rj["a"] = rec.a;
        rj["b"] = rec.b;
        rj["fixed"] = ojson(rec.fixed);
        rj["size"] = rec.size;
        rj["empty"] = rec.empty;
        rj["rational_mle"] = rec.rational_mle;
        if (rec.witness) rj["witness"] = witness_to_json(*rec.witness);
        records.push_back(std::move(rj));
    }
    j["slices"] = std::move(records);
    if (r.first_failing)
        j["first_failing"] = *r.first_failing;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace quasitoric
