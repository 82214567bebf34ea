#include "skewpp/cli.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "skewpp/cache.hpp"
#include "skewpp/counting.hpp"
#include "skewpp/errors.hpp"
#include "skewpp/marking.hpp"
#include "skewpp/serialize.hpp"

namespace skewpp {

namespace {

enum class Format { kText, kJson, kCsv };

Format parse_format(const std::string& text) {
    if (text == "json") return Format::kJson;
    if (text == "csv") return Format::kCsv;
    return Format::kText;
}

void emit(const nlohmann::ordered_json& doc, std::ostream& out) { out << doc.dump(2) << "\n"; }

const char* bool_text(bool value) { return value ? "true" : "false"; }

// Right-aligned grid view; `overlined` (ascending cell indices) may be empty.
void print_grid(const Filling& filling, const std::vector<int>& overlined, std::ostream& out) {
    const SkewShape& shape = filling.shape();
    std::vector<std::string> tokens(static_cast<std::size_t>(shape.cell_count()));
    std::size_t width = 0;
    std::size_t next = 0;
    for (int idx = 0; idx < shape.cell_count(); ++idx) {
        std::string token = std::to_string(filling.value(idx));
        if (next < overlined.size() && overlined[next] == idx) {
            token += '~';
            ++next;
        }
        width = std::max(width, token.size());
        tokens[static_cast<std::size_t>(idx)] = std::move(token);
    }
    int idx = 0;
    for (int r = 1; r <= shape.rows(); ++r) {
        std::string line;
        for (int c = 1; c <= shape.row_last_col(r); ++c) {
            if (c > 1) line += ' ';
            if (c < shape.row_first_col(r)) {
                line += std::string(width, ' ');
            } else {
                const std::string& token = tokens[static_cast<std::size_t>(idx++)];
                line += std::string(width - token.size(), ' ') + token;
            }
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

void print_table_text(const CountTable& table, std::ostream& out) {
    out << "n=" << table.n << " k=" << table.k << " side=" << to_string(table.side)
        << " entries=" << table.entries.size() << "\n";
    for (const auto& [key, count] : table.entries)
        out << "j=" << key.first << " l=" << key.second << " count=" << count << "\n";
}

void print_verify_text(const VerifyReport& report, std::ostream& out) {
    out << "side=" << to_string(report.side) << " variant=" << to_string(report.variant)
        << " max_n=" << report.max_n << "\n";
    for (const VerifyRow& row : report.rows) {
        out << "n=" << row.n << " k=" << row.k << " m=" << row.m << " lhs=" << row.lhs
            << " rhs=" << row.rhs << (row.match ? " match" : " MISMATCH") << "\n";
    }
    out << "rows=" << report.rows.size() << " mismatches=" << report.mismatch_count << "\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact enumeration and identity checks for skew plane partitions and their "
                 "overlined liftings"};
    app.require_subcommand(1);

    std::string format_name = "text";
    std::string cache_dir;
    int workers = 1;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--cache-dir", cache_dir, "Directory for cached count tables");
    app.add_option("--workers", workers, "Worker threads for counting sweeps")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // shapes
    CLI::App* shapes_cmd =
        app.add_subcommand("shapes", "List skew shapes by outer weight and cell count");
    shapes_cmd->fallthrough();
    int shapes_max_outer = 1;
    int shapes_min_cells = 1;
    int shapes_max_cells = 0;
    shapes_cmd->add_option("--max-outer", shapes_max_outer, "Maximum outer partition weight")
        ->required()
        ->check(CLI::PositiveNumber);
    shapes_cmd->add_option("--min-cells", shapes_min_cells, "Minimum cell count")
        ->check(CLI::PositiveNumber);
    CLI::Option* shapes_max_cells_opt =
        shapes_cmd->add_option("--max-cells", shapes_max_cells, "Maximum cell count")
            ->check(CLI::PositiveNumber);

    // fillings
    CLI::App* fillings_cmd =
        app.add_subcommand("fillings", "List the fillings of a shape with a given weight");
    fillings_cmd->fallthrough();
    std::string fillings_shape;
    int fillings_weight = 1;
    bool fillings_square_free_only = false;
    bool fillings_pretty = false;
    fillings_cmd->add_option("--shape", fillings_shape, "Skew shape, e.g. \"5,4,4,3/2,1\"")
        ->required();
    fillings_cmd->add_option("--weight", fillings_weight, "Total of all values")
        ->required()
        ->check(CLI::PositiveNumber);
    fillings_cmd->add_flag("--square-free-only", fillings_square_free_only,
                           "Keep only square-free fillings");
    fillings_cmd->add_flag("--pretty", fillings_pretty, "Aligned grid view (text format only)");

    // stats
    CLI::App* stats_cmd =
        app.add_subcommand("stats", "Pivot statistics of a square-free filling");
    stats_cmd->fallthrough();
    std::string stats_shape;
    std::string stats_filling;
    int stats_k = 1;
    stats_cmd->add_option("--shape", stats_shape, "Skew shape")->required();
    stats_cmd->add_option("--filling", stats_filling, "Filling, rows joined by ';'")->required();
    stats_cmd->add_option("--k", stats_k, "Pivot value")->required()->check(CLI::PositiveNumber);

    // liftings
    CLI::App* liftings_cmd =
        app.add_subcommand("liftings", "List the overlined liftings of a square-free filling");
    liftings_cmd->fallthrough();
    std::string liftings_shape;
    std::string liftings_filling;
    std::string liftings_model = "value";
    bool liftings_pretty = false;
    liftings_cmd->add_option("--shape", liftings_shape, "Skew shape")->required();
    liftings_cmd->add_option("--filling", liftings_filling, "Filling, rows joined by ';'")
        ->required();
    liftings_cmd->add_option("--model", liftings_model, "Overline semantics")
        ->check(CLI::IsMember({"value", "occurrence", "hybrid"}))
        ->capture_default_str();
    liftings_cmd->add_flag("--pretty", liftings_pretty, "Aligned grid view (text format only)");

    // count pg|ps
    CLI::App* count_cmd = app.add_subcommand("count", "Direct pivot-rank counts");
    count_cmd->fallthrough();
    count_cmd->require_subcommand(1);
    int count_n = 1;
    int count_k = 1;
    int count_m = 1;
    std::string count_variant = "restricted";
    CLI::App* count_pg = count_cmd->add_subcommand(
        "pg", "Fillings in which the pivot is the m-th greatest value");
    CLI::App* count_ps = count_cmd->add_subcommand(
        "ps", "Fillings in which the pivot is the m-th smallest value");
    for (CLI::App* sub : {count_pg, count_ps}) {
        sub->fallthrough();
        sub->add_option("--n", count_n, "Weight")->required()->check(CLI::PositiveNumber);
        sub->add_option("--k", count_k, "Pivot value")->required()->check(CLI::PositiveNumber);
        sub->add_option("--m", count_m, "Rank")->required()->check(CLI::PositiveNumber);
        sub->add_option("--variant", count_variant, "Counting variant")
            ->check(CLI::IsMember({"restricted", "literal"}))
            ->capture_default_str();
    }

    // table pg|ps
    CLI::App* table_cmd = app.add_subcommand("table", "Lifting count tables indexed by (j, l)");
    table_cmd->fallthrough();
    table_cmd->require_subcommand(1);
    int table_n = 1;
    int table_k = 1;
    bool table_use_oracle = false;
    CLI::App* table_pg = table_cmd->add_subcommand("pg", "Co-overlined values above the pivot");
    CLI::App* table_ps = table_cmd->add_subcommand("ps", "Co-overlined values below the pivot");
    for (CLI::App* sub : {table_pg, table_ps}) {
        sub->fallthrough();
        sub->add_option("--n", table_n, "Weight")->required()->check(CLI::PositiveNumber);
        sub->add_option("--k", table_k, "Pivot value")->required()->check(CLI::PositiveNumber);
        sub->add_flag("--oracle", table_use_oracle,
                      "Recompute by explicit lifting enumeration (never cached)");
    }

    // verify …
    CLI::App* verify_cmd = app.add_subcommand("verify", "Identity and consistency sweeps");
    verify_cmd->fallthrough();
    verify_cmd->require_subcommand(1);
    int verify_max_n = 6;
    std::string verify_variant = "restricted";
    bool verify_fail_fast = false;
    CLI::App* verify_t1 = verify_cmd->add_subcommand(
        "theorem1", "Alternating-sum identity for counts above the pivot");
    CLI::App* verify_t2 = verify_cmd->add_subcommand(
        "theorem2", "Alternating-sum identity for counts below the pivot");
    for (CLI::App* sub : {verify_t1, verify_t2}) {
        sub->fallthrough();
        sub->add_option("--max-n", verify_max_n, "Largest weight to sweep")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--variant", verify_variant, "Counting variant")
            ->check(CLI::IsMember({"restricted", "literal"}))
            ->capture_default_str();
        sub->add_flag("--fail-fast", verify_fail_fast, "Stop after the first mismatch");
    }
    CLI::App* verify_lemma = verify_cmd->add_subcommand(
        "lemma1", "Alternating binomial sum collapses to the diagonal indicator");
    verify_lemma->fallthrough();
    int lemma_max = 12;
    verify_lemma->add_option("--max", lemma_max, "Largest D and R to check")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    CLI::App* verify_models_cmd = verify_cmd->add_subcommand(
        "models", "Marking models against brute-force overline condition checks");
    verify_models_cmd->fallthrough();
    int models_max_n = 6;
    verify_models_cmd->add_option("--max-n", models_max_n, "Largest filling weight to sweep")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("skewpp");
    for (const std::string& arg : args) argv.push_back(arg.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    const Format format = parse_format(format_name);
    try {
        if (shapes_cmd->parsed()) {
            if (shapes_max_cells_opt->count() == 0) shapes_max_cells = shapes_max_outer;
            const std::vector<SkewShape> shapes =
                enumerate_skew_shapes(shapes_max_outer, shapes_min_cells, shapes_max_cells);
            if (format == Format::kText) {
                for (const SkewShape& shape : shapes) out << shape.str() << "\n";
            } else if (format == Format::kJson) {
                nlohmann::ordered_json doc;
                doc["max_outer"] = shapes_max_outer;
                doc["min_cells"] = shapes_min_cells;
                doc["max_cells"] = shapes_max_cells;
                doc["count"] = shapes.size();
                nlohmann::ordered_json list = nlohmann::ordered_json::array();
                for (const SkewShape& shape : shapes) list.push_back(shape.str());
                doc["shapes"] = std::move(list);
                emit(doc, out);
            } else {
                out << "shape,cells\n";
                for (const SkewShape& shape : shapes)
                    out << csv_field(shape.str()) << ',' << shape.cell_count() << "\n";
            }
            return 0;
        }

        if (fillings_cmd->parsed()) {
            const SkewShape shape = SkewShape::parse(fillings_shape);
            std::vector<Filling> fillings = enumerate_fillings(shape, fillings_weight);
            if (fillings_square_free_only)
                std::erase_if(fillings,
                              [](const Filling& filling) { return !is_square_free(filling); });
            if (format == Format::kText) {
                if (fillings_pretty) {
                    for (std::size_t i = 0; i < fillings.size(); ++i) {
                        if (i > 0) out << "\n";
                        print_grid(fillings[i], {}, out);
                    }
                } else {
                    for (const Filling& filling : fillings) out << filling.str() << "\n";
                }
            } else if (format == Format::kJson) {
                nlohmann::ordered_json doc;
                doc["shape"] = shape.str();
                doc["weight"] = fillings_weight;
                doc["square_free_only"] = fillings_square_free_only;
                doc["count"] = fillings.size();
                nlohmann::ordered_json list = nlohmann::ordered_json::array();
                for (const Filling& filling : fillings) list.push_back(filling.str());
                doc["fillings"] = std::move(list);
                emit(doc, out);
            } else {
                out << "filling\n";
                for (const Filling& filling : fillings) out << csv_field(filling.str()) << "\n";
            }
            return 0;
        }

        if (stats_cmd->parsed()) {
            const SkewShape shape = SkewShape::parse(stats_shape);
            const Filling filling = Filling::parse(shape, stats_filling);
            const ValueStats s = stats(filling, stats_k);
            if (format == Format::kText) {
                out << "k=" << s.k << " present=" << bool_text(s.present)
                    << " d_above=" << s.d_above << " l_above=" << s.l_above
                    << " clean_below=" << bool_text(s.clean_below) << " d_below=" << s.d_below
                    << " l_below=" << s.l_below << " clean_above=" << bool_text(s.clean_above)
                    << "\n";
            } else if (format == Format::kJson) {
                nlohmann::ordered_json doc;
                doc["k"] = s.k;
                doc["present"] = s.present;
                doc["d_above"] = s.d_above;
                doc["l_above"] = s.l_above;
                doc["clean_below"] = s.clean_below;
                doc["d_below"] = s.d_below;
                doc["l_below"] = s.l_below;
                doc["clean_above"] = s.clean_above;
                emit(doc, out);
            } else {
                out << "k,present,d_above,l_above,clean_below,d_below,l_below,clean_above\n"
                    << s.k << ',' << bool_text(s.present) << ',' << s.d_above << ','
                    << s.l_above << ',' << bool_text(s.clean_below) << ',' << s.d_below << ','
                    << s.l_below << ',' << bool_text(s.clean_above) << "\n";
            }
            return 0;
        }

        if (liftings_cmd->parsed()) {
            const SkewShape shape = SkewShape::parse(liftings_shape);
            const Filling filling = Filling::parse(shape, liftings_filling);
            const MarkingModel model = parse_model(liftings_model);
            const std::vector<Lifting> liftings = enumerate_liftings(filling, model);
            if (format == Format::kText) {
                if (liftings_pretty) {
                    for (std::size_t i = 0; i < liftings.size(); ++i) {
                        if (i > 0) out << "\n";
                        print_grid(liftings[i].filling(), liftings[i].overlined(), out);
                    }
                } else {
                    for (const Lifting& lifting : liftings) out << lifting.str() << "\n";
                }
            } else if (format == Format::kJson) {
                nlohmann::ordered_json doc;
                doc["shape"] = shape.str();
                doc["filling"] = filling.str();
                doc["model"] = std::string(to_string(model));
                doc["count"] = liftings.size();
                nlohmann::ordered_json list = nlohmann::ordered_json::array();
                for (const Lifting& lifting : liftings) list.push_back(lifting.str());
                doc["liftings"] = std::move(list);
                emit(doc, out);
            } else {
                out << "lifting\n";
                for (const Lifting& lifting : liftings) out << csv_field(lifting.str()) << "\n";
            }
            return 0;
        }

        if (count_cmd->parsed()) {
            const bool is_pg = count_pg->parsed();
            const Variant variant = parse_variant(count_variant);
            const long long count = is_pg ? pg(count_n, count_k, count_m, variant, workers)
                                          : ps(count_n, count_k, count_m, variant, workers);
            if (format == Format::kText) {
                out << count << "\n";
            } else if (format == Format::kJson) {
                nlohmann::ordered_json doc;
                doc["kind"] = is_pg ? "pg" : "ps";
                doc["n"] = count_n;
                doc["k"] = count_k;
                doc["m"] = count_m;
                doc["variant"] = std::string(to_string(variant));
                doc["count"] = std::to_string(count);
                emit(doc, out);
            } else {
                out << "kind,n,k,m,variant,count\n"
                    << (is_pg ? "pg" : "ps") << ',' << count_n << ',' << count_k << ','
                    << count_m << ',' << to_string(variant) << ',' << count << "\n";
            }
            return 0;
        }

        if (table_cmd->parsed()) {
            const bool is_pg = table_pg->parsed();
            const Side side = is_pg ? Side::kAbove : Side::kBelow;
            CountTable table;
            if (table_use_oracle) {
                table = table_oracle(table_n, table_k, side);
            } else if (!cache_dir.empty()) {
                const TableCache cache(cache_dir);
                if (auto hit = cache.lookup(table_n, table_k, side)) {
                    table = *std::move(hit);
                } else {
                    table = is_pg ? pg_table(table_n, table_k, workers)
                                  : ps_table(table_n, table_k, workers);
                    cache.store(table, err);
                }
            } else {
                table = is_pg ? pg_table(table_n, table_k, workers)
                              : ps_table(table_n, table_k, workers);
            }
            if (format == Format::kText)
                print_table_text(table, out);
            else if (format == Format::kJson)
                emit(to_json(table), out);
            else
                out << to_csv(table);
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (verify_t1->parsed() || verify_t2->parsed()) {
                const Side side = verify_t1->parsed() ? Side::kAbove : Side::kBelow;
                const Variant variant = parse_variant(verify_variant);
                const VerifyReport report =
                    verify(side, verify_max_n, variant, verify_fail_fast, workers);
                if (format == Format::kText)
                    print_verify_text(report, out);
                else if (format == Format::kJson)
                    emit(to_json(report), out);
                else
                    out << to_csv(report);
                return report.mismatch_count == 0 ? 0 : 1;
            }
            if (verify_lemma->parsed()) {
                const Lemma1Report report = verify_lemma1(lemma_max);
                if (format == Format::kText) {
                    out << "max=" << report.max << " checked=" << report.checked
                        << " mismatches=" << report.mismatches.size() << "\n";
                    for (const Lemma1Row& row : report.mismatches)
                        out << "d=" << row.d << " r=" << row.r << " lhs=" << row.lhs
                            << " expected=" << row.expected << "\n";
                } else if (format == Format::kJson) {
                    emit(to_json(report), out);
                } else {
                    out << "max,checked,mismatches\n"
                        << report.max << ',' << report.checked << ','
                        << report.mismatches.size() << "\n";
                }
                return report.mismatches.empty() ? 0 : 1;
            }
            const ModelsReport report = verify_models(models_max_n);
            if (format == Format::kText) {
                out << "max_n=" << report.max_n << " fillings=" << report.fillings_checked
                    << " square_free=" << report.square_free_checked
                    << " blocked=" << report.blocked_checked
                    << " mismatches=" << report.mismatches.size() << "\n";
                for (const ModelsMismatch& row : report.mismatches)
                    out << "shape=" << row.shape << " filling=" << row.filling
                        << " detail=" << row.detail << "\n";
            } else if (format == Format::kJson) {
                emit(to_json(report), out);
            } else {
                out << "max_n,fillings_checked,square_free_checked,blocked_checked,mismatches\n"
                    << report.max_n << ',' << report.fillings_checked << ','
                    << report.square_free_checked << ',' << report.blocked_checked << ','
                    << report.mismatches.size() << "\n";
            }
            return report.mismatches.empty() ? 0 : 1;
        }

        err << "error: no command selected\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

} // namespace skewpp
