namespace gpd {}
