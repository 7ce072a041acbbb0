# cli package: display helpers and Rich UI components
