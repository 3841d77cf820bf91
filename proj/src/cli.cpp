namespace flagcy {}
