# vdb-digraph application
