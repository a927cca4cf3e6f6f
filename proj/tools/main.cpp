#include "CLI11.hpp"

#include "quandle/amalgam.hpp"
#include "quandle/core.hpp"
#include "quandle/decomp.hpp"
#include "quandle/generators.hpp"
#include "quandle/isomorph.hpp"
#include "quandle/matrix_io.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace {

using namespace quandle;

constexpr int kExitInvalid = 1;
constexpr int kExitParse = 2;
constexpr int kExitBound = 3;

struct CommandError {
    int code;
    std::string message;
};

std::vector<Table> read_tables(const std::string& path) {
    if (path == "-")
        return parse_matrix_file(std::cin);
    std::ifstream in(path);
    if (!in)
        throw CommandError{kExitParse, "cannot open '" + path + "'"};
    return parse_matrix_file(in);
}

Table read_single(const std::string& path) {
    auto tables = read_tables(path);
    if (tables.size() != 1)
        throw CommandError{kExitParse, "'" + path + "' must contain exactly one record"};
    return std::move(tables[0]);
}

Table read_valid(const std::string& path) {
    Table t = read_single(path);
    if (auto violation = check_axioms(t))
        throw CommandError{kExitInvalid, "'" + path + "' is not a quandle: " + violation->describe()};
    return t;
}

void emit(const std::vector<Table>& tables, const std::string& output_path) {
    if (output_path.empty()) {
        write_matrix_file(std::cout, tables);
        return;
    }
    std::ofstream out(output_path);
    if (!out)
        throw CommandError{kExitParse, "cannot open '" + output_path + "' for writing"};
    write_matrix_file(out, tables);
}

std::string set_text(const std::vector<int>& xs) {
    std::string out = "{";
    for (size_t i = 0; i < xs.size(); ++i)
        out += (i ? "," : "") + std::to_string(xs[i]);
    return out + "}";
}

int cmd_validate(const std::string& path) {
    const auto tables = read_tables(path);
    int bad = 0;
    for (size_t i = 0; i < tables.size(); ++i) {
        if (auto violation = check_axioms(tables[i])) {
            std::cerr << "record " << i + 1 << ": " << violation->describe() << "\n";
            ++bad;
        }
    }
    if (bad == 0) {
        std::cerr << "ok: " << tables.size() << " record(s) valid\n";
        return 0;
    }
    return kExitInvalid;
}

int cmd_orbits(const std::string& path, bool oracle) {
    const auto tables = read_tables(path);
    for (size_t i = 0; i < tables.size(); ++i) {
        const Table& q = tables[i];
        if (auto violation = check_axioms(q))
            throw CommandError{kExitInvalid,
                               "record " + std::to_string(i + 1) + ": " + violation->describe()};
        if (i > 0)
            std::cout << "\n";
        std::cout << "record " << i + 1 << "\n";
        write_matrix_record(std::cout, q);

        const auto decomposition = orbit_decomposition(q);
        std::cout << "orbits:";
        for (const auto& part : decomposition.parts)
            std::cout << " " << set_text(part);
        std::cout << "\n";

        for (const auto& part : decomposition.parts) {
            const auto sub = restrict_to(q, part);
            std::cout << "part " << set_text(part)
                      << ": connected=" << (is_connected(sub.table) ? "yes" : "no") << "\n";
            write_matrix_record(std::cout, sub.table);
        }
        std::cout << "depth: " << subquandle_depth(q) << "\n";

        if (oracle) {
            std::set<std::vector<int>> expected;
            for (int a = 1; a <= q.order(); ++a)
                expected.insert(minimal_complemented(q, a));
            const std::set<std::vector<int>> parts(decomposition.parts.begin(),
                                                   decomposition.parts.end());
            if (parts != expected)
                throw CommandError{kExitInvalid, "oracle: orbit parts disagree with S(a) scan"};
            std::cout << "oracle: S(a) scan agrees\n";
            std::cout << "complemented:";
            for (const auto& sub : all_subquandles(q))
                if (is_complemented(q, sub))
                    std::cout << " " << set_text(sub);
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_depth(const std::string& path) {
    for (const auto& q : read_tables(path)) {
        if (auto violation = check_axioms(q))
            throw CommandError{kExitInvalid, violation->describe()};
        std::cout << subquandle_depth(q) << "\n";
    }
    return 0;
}

int cmd_dual(const std::string& path, const std::string& output_path) {
    std::vector<Table> duals;
    for (const auto& q : read_tables(path)) {
        if (auto violation = check_axioms(q))
            throw CommandError{kExitInvalid, violation->describe()};
        duals.push_back(dual(q));
    }
    emit(duals, output_path);
    return 0;
}

int cmd_product(const std::string& path_a, const std::string& path_b,
                const std::string& output_path) {
    emit({product(read_valid(path_a), read_valid(path_b))}, output_path);
    return 0;
}

int cmd_glue(const std::string& path_a, const std::string& path_b, bool up_to_iso,
             const std::string& output_path) {
    auto structures = glue2(read_valid(path_a), read_valid(path_b));
    if (up_to_iso) {
        std::set<Table> classes;
        for (const auto& t : structures)
            classes.insert(canonical_form(t));
        structures.assign(classes.begin(), classes.end());
    }
    std::cerr << "count: " << structures.size() << "\n";
    emit(structures, output_path);
    return 0;
}

int cmd_enumerate(const std::string& path, const std::string& output_path) {
    std::vector<Table> blocks;
    for (const auto& q : read_tables(path)) {
        if (auto violation = check_axioms(q))
            throw CommandError{kExitInvalid, violation->describe()};
        blocks.push_back(q);
    }
    const auto structures = enumerate_nonconnected(blocks);
    std::cerr << "count: " << structures.size() << "\n";
    emit(structures, output_path);
    return 0;
}

int cmd_iso(const std::string& path_a, const std::string& path_b) {
    const auto witness = are_isomorphic(read_valid(path_a), read_valid(path_b));
    if (!witness) {
        std::cerr << "not isomorphic\n";
        return kExitInvalid;
    }
    std::cout << "isomorphic\n";
    for (int a = 1; a <= witness->size(); ++a)
        std::cout << (a > 1 ? " " : "") << (*witness)(a);
    std::cout << "\n";
    return 0;
}

int cmd_census(int n, int max_order, const std::string& output_path) {
    const auto tables = census(n, max_order);
    std::cerr << "count: " << tables.size() << "\n";
    emit(tables, output_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandles as operation matrices: validation, orbit "
                 "decomposition, gluing and census"};
    app.require_subcommand(1);
    std::function<int()> run;

    std::string path, path_b, output_path;
    bool oracle = false;
    bool up_to_iso = false;
    int order = 0, max_order = 5, param_t = 0;

    auto* validate_cmd = app.add_subcommand("validate", "check the quandle axioms per record");
    validate_cmd->add_option("file", path, "matrix file ('-' for stdin)")->required();
    validate_cmd->callback([&] { run = [&] { return cmd_validate(path); }; });

    auto* orbits_cmd =
        app.add_subcommand("orbits", "orbit decomposition, per-part matrices and depth");
    orbits_cmd->add_option("file", path)->required();
    orbits_cmd->add_flag("--oracle", oracle,
                         "cross-check parts against the exhaustive S(a) scan and list "
                         "complemented subquandles");
    orbits_cmd->callback([&] { run = [&] { return cmd_orbits(path, oracle); }; });

    auto* depth_cmd = app.add_subcommand("depth", "subquandle depth per record");
    depth_cmd->add_option("file", path)->required();
    depth_cmd->callback([&] { run = [&] { return cmd_depth(path); }; });

    auto* dual_cmd = app.add_subcommand("dual", "dual quandle per record");
    dual_cmd->add_option("file", path)->required();
    dual_cmd->add_option("--output", output_path, "write records here instead of stdout");
    dual_cmd->callback([&] { run = [&] { return cmd_dual(path, output_path); }; });

    auto* product_cmd = app.add_subcommand("product", "Cartesian product of two quandles");
    product_cmd->add_option("fileA", path)->required();
    product_cmd->add_option("fileB", path_b)->required();
    product_cmd->add_option("--output", output_path);
    product_cmd->callback([&] { run = [&] { return cmd_product(path, path_b, output_path); }; });

    auto* glue_cmd =
        app.add_subcommand("glue", "all quandle structures on the union of two quandles");
    glue_cmd->add_option("fileA", path)->required();
    glue_cmd->add_option("fileB", path_b)->required();
    glue_cmd->add_flag("--up-to-iso", up_to_iso, "emit canonical representatives only");
    glue_cmd->add_option("--output", output_path);
    glue_cmd->callback(
        [&] { run = [&] { return cmd_glue(path, path_b, up_to_iso, output_path); }; });

    auto* enum_cmd = app.add_subcommand(
        "enumerate", "all non-connected structures on the blocks of a multi-record file");
    enum_cmd->add_option("file", path)->required();
    enum_cmd->add_option("--output", output_path);
    enum_cmd->callback([&] { run = [&] { return cmd_enumerate(path, output_path); }; });

    auto* iso_cmd = app.add_subcommand("iso", "isomorphism test with witness");
    iso_cmd->add_option("fileA", path)->required();
    iso_cmd->add_option("fileB", path_b)->required();
    iso_cmd->callback([&] { run = [&] { return cmd_iso(path, path_b); }; });

    auto* census_cmd = app.add_subcommand("census", "all quandles of order n up to isomorphism");
    census_cmd->add_option("n", order, "order")->required();
    census_cmd->add_option("--max-order", max_order, "raise the default order bound of 5");
    census_cmd->add_option("--output", output_path);
    census_cmd->callback([&] { run = [&] { return cmd_census(order, max_order, output_path); }; });

    auto* gen_cmd = app.add_subcommand("gen", "generate standard quandles");
    gen_cmd->require_subcommand(1);
    auto* gen_trivial = gen_cmd->add_subcommand("trivial", "T_n");
    gen_trivial->add_option("n", order)->required();
    gen_trivial->add_option("--output", output_path);
    gen_trivial->callback([&] { run = [&] { emit({trivial(order)}, output_path); return 0; }; });
    auto* gen_dihedral = gen_cmd->add_subcommand("dihedral", "R_n");
    gen_dihedral->add_option("n", order)->required();
    gen_dihedral->add_option("--output", output_path);
    gen_dihedral->callback([&] { run = [&] { emit({dihedral(order)}, output_path); return 0; }; });
    auto* gen_alexander = gen_cmd->add_subcommand("alexander", "Z_n with x > y = tx + (1-t)y");
    gen_alexander->add_option("n", order)->required();
    gen_alexander->add_option("t", param_t)->required();
    gen_alexander->add_option("--output", output_path);
    gen_alexander->callback(
        [&] { run = [&] { emit({alexander(order, param_t)}, output_path); return 0; }; });
    auto* gen_conj = gen_cmd->add_subcommand("conjugation", "x > y = y^-1 x y from a Cayley table");
    gen_conj->add_option("file", path, "group multiplication table")->required();
    gen_conj->add_option("--output", output_path);
    gen_conj->callback(
        [&] { run = [&] { emit({conjugation(read_single(path))}, output_path); return 0; }; });

    CLI11_PARSE(app, argc, argv);

    try {
        return run();
    } catch (const CommandError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const BoundExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBound;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
