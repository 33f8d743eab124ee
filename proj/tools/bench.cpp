// Compares the OpenMP verification kernel against the serial reference on the
// two inverse-problem campaigns and checks that the reports agree.

#include <chrono>
#include <cstdlib>
#include <iostream>

#include "invprob/schema_file.hpp"
#include "invprob/verify.hpp"

using namespace invprob;

namespace {

double time_run(const ProblemSchema& schema, const Interpretation& interp,
                const std::string& sampler, std::uint64_t n, bool parallel,
                VerificationReport& out) {
    auto start = std::chrono::steady_clock::now();
    out = parallel ? check_implication(schema, interp, sampler, n, 7)
                   : check_implication_serial(schema, interp, sampler, n, 7);
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::string schema_dir = argc > 1 ? argv[1] : "schemas";
    std::uint64_t n = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20000;

    struct Case {
        const char* file;
        const char* sampler;
    } cases[] = {{"group1_inverse.schema", "group1.inverse"},
                 {"group2_inverse.schema", "group2.inverse"}};

    for (const auto& c : cases) {
        SchemaFile f = load_schema_file(schema_dir + "/" + c.file);
        f.schema.kind = SchemaKind::Inverse;
        VerificationReport serial, parallel;
        double ts = time_run(f.schema, f.interpretation, c.sampler, n, false, serial);
        double tp = time_run(f.schema, f.interpretation, c.sampler, n, true, parallel);
        bool same = serial.passes == parallel.passes && serial.failures == parallel.failures &&
                    serial.branches == parallel.branches &&
                    emit_report_json(serial) == emit_report_json(parallel);
        std::cout << c.file << " (" << n << " samples): serial " << ts << " s, parallel "
                  << tp << " s, speedup " << ts / tp << "x, reports "
                  << (same ? "identical" : "DIFFER") << "\n";
        if (!same) return 1;
    }
    return 0;
}
