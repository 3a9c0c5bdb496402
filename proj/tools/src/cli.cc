#include "conflux_cli/cli.h"

#include <fstream>

#include "common.h"

namespace conflux::cli {

namespace {

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

int report_error(std::ostream& err, const char* kind, const std::string& message, int status) {
  Json doc;
  doc["error"] = kind;
  doc["message"] = message;
  err << doc.dump(2) << "\n";
  return status;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Confluent epimorphisms between finite graphs", "conflux"};
  app.require_subcommand(1);
  Session session;
  add_check_commands(app, session);
  add_amalgamate_commands(app, session);
  add_construct_commands(app, session);
  add_lift_commands(app, session);
  add_cycles_commands(app, session);
  add_sequence_commands(app, session);
  add_export_commands(app, session);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, "usage", e.what(), kUsage);
  }
  if (!session.chosen) return report_error(err, "usage", "no subcommand selected", kUsage);

  try {
    Outcome outcome = session.chosen();
    const std::string text = outcome.raw ? outcome.dot : outcome.doc.dump(2) + "\n";
    if (session.common.output.empty()) {
      out << text;
    } else {
      write_text(session.common.output, text);
    }
    if (!session.common.dot.empty()) {
      if (outcome.dot.empty()) throw UsageError("this command has no graph to render");
      write_text(session.common.dot, outcome.dot);
    }
    return outcome.status;
  } catch (const ParseError& e) {
    return report_error(err, "parse", e.what(), kUsage);
  } catch (const BudgetExceeded& e) {
    return report_error(err, "budget", e.what(), kBudget);
  } catch (const InvalidArgument& e) {
    return report_error(err, "invalid", e.what(), kUsage);
  } catch (const Error& e) {
    return report_error(err, "failure", e.what(), kViolation);
  }
}

}  // namespace conflux::cli
