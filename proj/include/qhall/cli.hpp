#pragma once
/**
 * Command line front end.
 *
 * Verbs:
 *   enum      list the members of one family up to a weight bound, with
 *             their statistics
 *   gf        expand a closed form or an enumeration generating function
 *   check     run one catalogued identity check
 *   bijection trace one application of an insertion map, or sweep-verify it
 *   suite     run the whole check catalog
 *
 * Exit codes: 0 success, 1 a check (or bijection sweep) failed, 2 usage
 * error (bad verb, flag, format, or unparsable spec text — usage goes to
 * the error stream), 3 domain error reported by the underlying modules
 * (parameters outside a formula's or family's domain).
 *
 * Output written to `out` is deterministic: the same argument vector always
 * produces byte-identical output.  Timing lines go to `err` only.
 */

#include <iosfwd>
#include <string>
#include <vector>

namespace qhall {

/** Run one command given argv-style arguments (program name excluded). */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/** Adapter for main(): skips argv[0]. */
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace qhall
