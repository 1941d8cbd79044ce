#ifndef FOCKCP_VERSION_HPP
#define FOCKCP_VERSION_HPP

#define FOCKCP_VERSION_STRING "0.1.0"

#endif
