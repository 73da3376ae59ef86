#ifndef CYCLES_LOG_HPP
#define CYCLES_LOG_HPP

#include <string>

namespace cycles {

// Diagnostics on stderr, controlled by the CYCLES_LOG environment variable
// (error | info | debug). Default is error.
enum class LogLevel { Error = 0, Info = 1, Debug = 2 };

LogLevel log_level();
void log_error(const std::string& msg);
void log_info(const std::string& msg);
void log_debug(const std::string& msg);

} // namespace cycles

#endif
